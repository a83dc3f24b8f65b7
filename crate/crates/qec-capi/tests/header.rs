//! Keeps the hand-maintained header in sync with the exported symbols and
//! checks that it actually compiles as C.

use std::path::Path;
use std::process::Command;

fn crate_file(rel: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join(rel);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

fn exported_symbols(source: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut lines = source.lines().peekable();
    while let Some(line) = lines.next() {
        if !line.trim_start().starts_with("#[no_mangle]") {
            continue;
        }
        // the fn item follows the attribute, possibly after doc lines
        for candidate in lines.by_ref() {
            if let Some(pos) = candidate.find("fn ") {
                let rest = &candidate[pos + 3..];
                let name: String = rest
                    .chars()
                    .take_while(|c| c.is_alphanumeric() || *c == '_')
                    .collect();
                out.push(name);
                break;
            }
        }
    }
    out
}

#[test]
fn header_declares_every_exported_symbol() {
    let source = crate_file("src/lib.rs");
    let header = crate_file("include/qec.h");
    let symbols = exported_symbols(&source);
    assert!(!symbols.is_empty());
    for sym in &symbols {
        assert!(
            header.contains(&format!("{sym}(")),
            "exported symbol {sym} missing from include/qec.h"
        );
    }
    // and the reverse: every qec_-prefixed identifier directly followed by
    // an open paren is a declared function and must be exported
    let bytes = header.as_bytes();
    let mut i = 0;
    while let Some(pos) = header[i..].find("qec_") {
        let start = i + pos;
        let end = start
            + header[start..]
                .chars()
                .take_while(|c| c.is_alphanumeric() || *c == '_')
                .map(char::len_utf8)
                .sum::<usize>();
        let preceded_ok = start == 0 || !bytes[start - 1].is_ascii_alphanumeric();
        if preceded_ok && bytes.get(end) == Some(&b'(') {
            let name = &header[start..end];
            assert!(
                symbols.iter().any(|s| s == name),
                "header declares {name} but the library does not export it"
            );
        }
        i = end.max(start + 1);
    }
}

#[test]
fn header_compiles_as_c() {
    let cc = ["cc", "gcc", "clang"]
        .iter()
        .find(|cc| Command::new(cc).arg("--version").output().is_ok());
    let Some(cc) = cc else {
        eprintln!("no C compiler found, skipping header compile check");
        return;
    };

    let dir = std::env::temp_dir().join(format!("qec-header-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let src = dir.join("smoke.c");
    std::fs::write(
        &src,
        r#"
#include "qec.h"
#include <stdio.h>

int main(void) {
    QecCode *code = 0;
    qec_status status = qec_bch_new(21, 1, 5, true, &code);
    if (status != QEC_OK) {
        printf("%s\n", qec_status_message(status));
        return 1;
    }
    printf("[%u, %u]\n", qec_code_length(code), qec_code_dimension(code));
    qec_code_free(code);
    return 0;
}
"#,
    )
    .unwrap();

    let include = Path::new(env!("CARGO_MANIFEST_DIR")).join("include");
    let out = Command::new(cc)
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only"])
        .arg("-I")
        .arg(&include)
        .arg(&src)
        .output()
        .expect("compiler runs");
    assert!(
        out.status.success(),
        "header failed to compile:\n{}",
        String::from_utf8_lossy(&out.stderr)
    );
    std::fs::remove_dir_all(&dir).ok();
}
