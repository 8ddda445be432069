//! Named fixtures.

use std::sync::OnceLock;

use super::{enumerate_ip_loops, PropertyFilter, Quasigroup, QuasigroupError};

pub const CATALOG_NAMES: &[&str] = &["Z1", "Z2", "Z3", "Z4", "Z5", "Z6", "Z7", "Z8", "S3", "D4", "Q8", "moufang12", "ip_min_nonassoc"];

pub fn catalog(name: &str) -> Result<Quasigroup, QuasigroupError> {
    let table = match name {
        "S3" => dihedral(3),
        "D4" => dihedral(4),
        "Q8" => quaternion(),
        "moufang12" => chein_s3(),
        "ip_min_nonassoc" => ip_min_nonassoc().rows(),
        _ => match name.strip_prefix('Z').and_then(|k| k.parse::<usize>().ok()) {
            Some(n @ 1..=8) => cyclic(n),
            _ => return Err(QuasigroupError::UnknownName(name.to_string())),
        },
    };
    let q = Quasigroup::from_cayley_table(&table)?;
    if name == "moufang12" {
        let flags = q.classify();
        assert!(flags.moufang && !flags.associative, "moufang12 fixture must be Moufang and nonassociative");
    }
    Ok(q)
}

fn build(n: usize, mul: impl Fn(usize, usize) -> usize) -> Vec<Vec<usize>> {
    (0..n).map(|i| (0..n).map(|j| mul(i, j)).collect()).collect()
}

fn cyclic(n: usize) -> Vec<Vec<usize>> {
    build(n, |i, j| (i + j) % n)
}

/// Dihedral group of order `2k`; element `a + k·b` is `r^a s^b`.
fn dihedral(k: usize) -> Vec<Vec<usize>> {
    build(2 * k, |x, y| {
        let (a, b) = (x % k, x / k);
        let (c, d) = (y % k, y / k);
        let rot = if b == 0 { (a + c) % k } else { (a + k - c) % k };
        rot + k * ((b + d) % 2)
    })
}

/// Quaternion group; element `u + 4·s` is `±{1, i, j, k}[u]` with sign `(-1)^s`.
fn quaternion() -> Vec<Vec<usize>> {
    // unit products: (sign, unit) of e_u e_v
    const UNITS: [[(usize, usize); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    build(8, |x, y| {
        let (sign, unit) = UNITS[x % 4][y % 4];
        unit + 4 * ((sign + x / 4 + y / 4) % 2)
    })
}

/// The Chein double of `S3`: the nonassociative Moufang loop of order 12.
/// Element `g + 6·b` is `(g, b)` with `g ∈ S3`.
fn chein_s3() -> Vec<Vec<usize>> {
    let s3 = Quasigroup::from_cayley_table(&dihedral(3)).expect("S3 is a group");
    build(12, |x, y| {
        let (g, b) = (x % 6, x / 6);
        let (h, d) = (y % 6, y / 6);
        match (b, d) {
            (0, 0) => s3.mul(g, h),
            (0, 1) => s3.mul(h, g) + 6,
            (1, 0) => s3.mul(g, s3.inv(h)) + 6,
            _ => s3.mul(s3.inv(h), g),
        }
    })
}

/// First nonassociative IP loop, in canonical order, of the smallest order
/// at which one exists. Computed once by enumeration and cached.
fn ip_min_nonassoc() -> &'static Quasigroup {
    static CELL: OnceLock<Quasigroup> = OnceLock::new();
    CELL.get_or_init(|| {
        let filter = PropertyFilter { associative: Some(false), ..Default::default() };
        (1..=super::MAX_ENUMERATION_ORDER)
            .find_map(|n| enumerate_ip_loops(n, &filter).expect("order within cap").into_iter().next())
            .expect("a nonassociative IP loop exists below the cap")
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_name_loads() {
        for name in CATALOG_NAMES {
            catalog(name).unwrap();
        }
        assert!(matches!(catalog("Z9"), Err(QuasigroupError::UnknownName(_))));
    }

    #[test]
    fn groups_are_groups() {
        for name in ["S3", "D4", "Q8"] {
            let f = catalog(name).unwrap().classify();
            assert!(f.associative && !f.commutative, "{name}");
        }
    }
}
