//! `K_i^+(A) = K_i(A^x)`: `Z x A^x` in degree 0 and the stable stems above.

use std::sync::OnceLock;

use serde::Serialize;

use crate::abelian::FgAbelianGroup;
use crate::error::KError;
use crate::monoid::FiniteMonoid;

const STABLE_STEMS: &str = include_str!("../data/stable_stems.txt");

/// Parsed stable-stem table; entry `i` is `pi_i^s`.
pub fn stable_stems() -> &'static [FgAbelianGroup] {
    static TABLE: OnceLock<Vec<FgAbelianGroup>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut rows: Vec<(usize, FgAbelianGroup)> = STABLE_STEMS
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(|l| {
                let (idx, group) = l.split_once(char::is_whitespace).expect("index and group");
                (
                    idx.parse().expect("stem index"),
                    group.trim().parse().expect("stem group"),
                )
            })
            .collect();
        rows.sort_by_key(|r| r.0);
        assert!(rows.iter().enumerate().all(|(i, r)| r.0 == i), "stem table has gaps");
        rows.into_iter().map(|r| r.1).collect()
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KPlus {
    pub index: u32,
    pub group: FgAbelianGroup,
}

pub fn k_plus(base: &FiniteMonoid, i: u32) -> Result<KPlus, KError> {
    let group = if i == 0 {
        FgAbelianGroup::free(1).product(&base.units())
    } else {
        stable_stems().get(i as usize).cloned().ok_or(KError::OutOfTable(i))?
    };
    Ok(KPlus { index: i, group })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table() {
        let t: Vec<String> = stable_stems().iter().map(ToString::to_string).collect();
        assert_eq!(t, ["Z", "Z/2", "Z/2", "Z/24", "0", "0", "Z/2", "Z/240"]);
    }

    #[test]
    fn degrees() {
        let pair = FiniteMonoid::idempotent_pair();
        assert_eq!(k_plus(&pair, 0).unwrap().group, FgAbelianGroup::free(1));
        let c6 = FiniteMonoid::cyclic_group(6);
        assert_eq!(k_plus(&c6, 0).unwrap().group.to_string(), "Z x Z/6");
        assert_eq!(k_plus(&c6, 3).unwrap().group, FgAbelianGroup::cyclic(24));
        assert_eq!(k_plus(&pair, 8), Err(KError::OutOfTable(8)));
    }
}
