//! Asymptotic rate bounds for binary codes and the quantum-rate thresholds
//! they induce: the largest relative distance at which the enlarged and
//! plain CSS constructions can still have positive rate.

use crate::error::{Error, Result};

/// Which upper bound on the rate R(d/n) of binary linear codes to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    /// R(x) < 1 - H(x/2).
    SpherePacking,
    /// The linear-programming bound of McEliece, Rodemich, Rumsey and
    /// Welch, in its two-variable form
    /// R(x) <= min over u in [0, 1-2x] of 1 + g(u^2) - g(u^2 + 2xu + 2x)
    /// with g(y) = H((1 - sqrt(1 - y)) / 2). At u = 1 - 2x this reduces to
    /// the single-variable form H(1/2 - sqrt(x(1-x))), so the minimized
    /// bound is never weaker.
    Mrrw,
}

/// Which quantum construction the threshold is for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CodeFamily {
    /// K/n < R(x) + R(2x/3) - 1.
    Enlarged,
    /// K/n < 2 R(x) - 1.
    Css,
}

/// Binary entropy H(x) = -x log2 x - (1-x) log2(1-x), with H(0) = H(1) = 0.
pub fn binary_entropy(x: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::DomainError { value: x, domain: "[0, 1]" });
    }
    // evaluate on the small side for precision; ln_1p keeps the (1-x) term
    // accurate down to x ~ 1e-300, well past the 1e-12 guard point
    let x = x.min(1.0 - x);
    if x == 0.0 {
        return Ok(0.0);
    }
    let ln2 = std::f64::consts::LN_2;
    Ok(-(x * x.ln() + (1.0 - x) * (-x).ln_1p()) / ln2)
}

fn g(y: f64) -> f64 {
    let y = y.clamp(0.0, 1.0);
    binary_entropy((1.0 - (1.0 - y).sqrt()) / 2.0).expect("argument stays in [0, 1/2]")
}

/// The MRRW bound for one value of the minimization variable u.
fn mrrw_at(x: f64, u: f64) -> f64 {
    1.0 + g(u * u) - g(u * u + 2.0 * x * u + 2.0 * x)
}

fn mrrw_bound(x: f64) -> f64 {
    if x >= 0.5 {
        return 0.0;
    }
    let hi = 1.0 - 2.0 * x;
    // dense grid to bracket the minimum, then golden-section refinement
    const GRID: usize = 512;
    let mut best_i = 0;
    let mut best = f64::INFINITY;
    for i in 0..=GRID {
        let u = hi * i as f64 / GRID as f64;
        let v = mrrw_at(x, u);
        if v < best {
            best = v;
            best_i = i;
        }
    }
    let mut a = hi * best_i.saturating_sub(1) as f64 / GRID as f64;
    let mut b = hi * (best_i + 1).min(GRID) as f64 / GRID as f64;
    let phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = b - phi * (b - a);
    let mut d = a + phi * (b - a);
    for _ in 0..80 {
        if mrrw_at(x, c) < mrrw_at(x, d) {
            b = d;
        } else {
            a = c;
        }
        c = b - phi * (b - a);
        d = a + phi * (b - a);
    }
    best.min(mrrw_at(x, (a + b) / 2.0))
}

/// Value of the named rate bound at relative distance x in [0, 1/2].
pub fn rate_bound(kind: BoundKind, x: f64) -> Result<f64> {
    if !(0.0..=0.5).contains(&x) {
        return Err(Error::DomainError { value: x, domain: "[0, 1/2]" });
    }
    Ok(match kind {
        BoundKind::SpherePacking => 1.0 - binary_entropy(x / 2.0)?,
        BoundKind::Mrrw => mrrw_bound(x),
    })
}

fn family_combination(kind: BoundKind, family: CodeFamily, x: f64) -> f64 {
    let r = |v: f64| rate_bound(kind, v).expect("bisection stays inside the domain");
    match family {
        CodeFamily::Enlarged => r(x) + r(2.0 * x / 3.0) - 1.0,
        CodeFamily::Css => 2.0 * r(x) - 1.0,
    }
}

/// The relative distance at which the family's rate combination crosses
/// zero, located by bisection to absolute tolerance 1e-6. Below the
/// threshold the construction can still have positive asymptotic rate.
pub fn quantum_rate_threshold(kind: BoundKind, family: CodeFamily) -> f64 {
    let mut lo = 1e-9;
    let mut hi = 0.5 - 1e-9;
    let f_lo = family_combination(kind, family, lo);
    let f_hi = family_combination(kind, family, hi);
    assert!(
        f_lo > 0.0 && f_hi < 0.0,
        "the combination must bracket a sign change"
    );
    while hi - lo > 1e-6 {
        let mid = 0.5 * (lo + hi);
        if family_combination(kind, family, mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}
