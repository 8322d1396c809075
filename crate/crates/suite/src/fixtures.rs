use std::path::{Path, PathBuf};

use kloop_core::CayleyTable;

/// A K-loop fixture stored as a table file.
#[derive(Clone, Copy, Debug)]
pub struct KloopFixture {
    pub name: &'static str,
    pub file: &'static str,
    /// Pinned value of `roundtrip_check(..).equal`.
    pub roundtrip_equal: bool,
}

/// The K-loop fixtures, smallest first. All are uniquely 2-divisible.
pub const KLOOP_FIXTURES: [KloopFixture; 8] = [
    KloopFixture { name: "Z3", file: "z3.tbl", roundtrip_equal: true },
    KloopFixture { name: "Z5", file: "z5.tbl", roundtrip_equal: true },
    KloopFixture { name: "Z7", file: "z7.tbl", roundtrip_equal: true },
    KloopFixture { name: "Z9", file: "z9.tbl", roundtrip_equal: true },
    KloopFixture { name: "Z3xZ3", file: "z3xz3.tbl", roundtrip_equal: true },
    KloopFixture { name: "Z15", file: "z15.tbl", roundtrip_equal: true },
    KloopFixture { name: "Heisenberg-27", file: "heisenberg27.tbl", roundtrip_equal: true },
    KloopFixture { name: "Z3wrZ3-81", file: "wreath81.tbl", roundtrip_equal: false },
];

pub fn fixtures_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../kloop/fixtures")
}

pub fn fixture_path(file: &str) -> PathBuf {
    fixtures_dir().join(file)
}

pub fn load_table(file: &str) -> CayleyTable {
    let path = fixture_path(file);
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    kloop::parse_table(&text).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

/// Plain row vectors of a table.
pub fn rows(t: &CayleyTable) -> Vec<Vec<usize>> {
    t.rows().map(|r| r.iter().map(|&v| v as usize).collect()).collect()
}
