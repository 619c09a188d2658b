//! Golden-file comparison for tests. Set `ACI_BLESS=1` to rewrite the files.

use std::path::PathBuf;

pub(crate) fn path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("golden").join(name)
}

/// Compares `actual` with the stored file, or stores it when blessing.
pub(crate) fn check(name: &str, actual: &str) {
    let p = path(name);
    if std::env::var_os("ACI_BLESS").is_some() {
        std::fs::write(&p, actual).unwrap_or_else(|e| panic!("cannot write {}: {e}", p.display()));
        return;
    }
    let stored = std::fs::read_to_string(&p)
        .unwrap_or_else(|e| panic!("cannot read {} (run with ACI_BLESS=1 to create it): {e}", p.display()));
    if stored != actual {
        let first = stored
            .lines()
            .zip(actual.lines())
            .position(|(a, b)| a != b)
            .map_or_else(|| "length differs".to_string(), |k| format!("first difference at line {}", k + 1));
        panic!("{} is out of date: {first}", p.display());
    }
}
