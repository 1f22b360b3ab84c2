//! The canonical tableau `T_{λ/μ}` built band by band, its content (the
//! lexicographically largest content of an amenable tableau) and the
//! coefficient of that leading term.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::shapes::{CellSet, StrictPartition};
use crate::tableaux::{Letter, Tableau};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalTableau {
    pub tableau: Tableau,
    /// `P_1, P_2, ...`
    pub bands: Vec<CellSet>,
}

impl CanonicalTableau {
    pub fn content(&self) -> StrictPartition {
        StrictPartition::new(self.bands.iter().map(|b| b.len() as u32).collect())
            .expect("band sizes strictly decrease")
    }
}

/// `P_k = {(x,y) ∈ U_k : (x-1,y-1) ∉ U_k}`.
pub fn next_band(u: &CellSet) -> CellSet {
    u.iter().filter(|&c| !u.contains(c.up_left())).collect()
}

/// Runs the band recurrence on `cells`. When `first` is given it replaces
/// `P_1` and the recurrence continues on the remaining boxes.
pub fn bands_from(cells: &CellSet, first: Option<&CellSet>) -> Vec<CellSet> {
    let mut bands = Vec::new();
    let mut u = cells.clone();
    if let Some(p) = first {
        u = u.difference(p);
        bands.push(p.clone());
    }
    while !u.is_empty() {
        let p = next_band(&u);
        u = u.difference(&p);
        bands.push(p);
    }
    bands
}

/// Fills band `P_k` with `k'` where the box below lies in `P_k`, else `k`.
pub fn tableau_from_bands(cells: &CellSet, bands: &[CellSet]) -> Result<Tableau> {
    let mut entries = BTreeMap::new();
    for (idx, p) in bands.iter().enumerate() {
        let k = idx as u32 + 1;
        for c in p.iter() {
            entries.insert(c, Letter::new(k, p.contains(c.down())));
        }
    }
    Tableau::new(cells, &entries)
}

pub fn canonical_tableau(cells: &CellSet) -> Result<CanonicalTableau> {
    if cells.is_empty() {
        return Err(Error::EmptyShape);
    }
    let bands = bands_from(cells, None);
    let tableau = tableau_from_bands(cells, &bands)?;
    Ok(CanonicalTableau { tableau, bands })
}

/// `ν = c(T_{λ/μ})`; empty for the empty shape.
pub fn lex_max_content(cells: &CellSet) -> StrictPartition {
    StrictPartition::new(
        bands_from(cells, None)
            .iter()
            .map(|b| b.len() as u32)
            .collect(),
    )
    .expect("band sizes strictly decrease")
}

/// `∏ 2^(comp(P_i) - 1)`; 1 for the empty shape.
pub fn leading_coefficient(cells: &CellSet) -> u64 {
    bands_from(cells, None)
        .iter()
        .map(|b| 1u64 << (b.component_count() - 1))
        .product()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::amenability::{is_amenable, satisfies_sufficient};
    use crate::shapes::SkewShape;

    fn cells(s: &str) -> CellSet {
        s.parse::<SkewShape>().unwrap().cells().unwrap()
    }

    #[test]
    fn displayed_canonical_tableau() {
        let c = canonical_tableau(&cells("6,5,3,2/4,1")).unwrap();
        let want = "\
. . . . 1' 1
. . 1' 1 1 2
. . 1 2' 2
. . . 2 3";
        assert_eq!(c.tableau.to_string(), want);
        assert_eq!(c.content(), "6,4,1".parse().unwrap());
        assert_eq!(
            c.tableau.reading_word().to_string(),
            "2 3 1 2' 2 1' 1 1 2 1' 1"
        );
        assert!(is_amenable(&c.tableau));
        for k in 2..=4 {
            assert!(satisfies_sufficient(&c.tableau, k));
        }
    }

    #[test]
    fn small_cases() {
        let one = canonical_tableau(&cells("1")).unwrap();
        assert_eq!(one.tableau.to_string(), "1");
        assert!(matches!(
            canonical_tableau(&CellSet::new()),
            Err(Error::EmptyShape)
        ));
        let c = canonical_tableau(&cells("6,5,2,1/4,3")).unwrap();
        let sizes: Vec<usize> = c.bands.iter().map(CellSet::len).collect();
        assert_eq!(sizes, vec![5, 2]);
        assert_eq!(leading_coefficient(&cells("6,5,2,1/4,3")), 4);
    }

    #[test]
    fn lex_max_examples() {
        assert_eq!(
            lex_max_content(&cells("6,4,3,2,1/5")),
            "5,3,2,1".parse().unwrap()
        );
        assert_eq!(leading_coefficient(&cells("6,4,3,2,1/5")), 2);
        for l in ["5,3,2", "4,1", "7,5,4,1"] {
            let p: StrictPartition = l.parse().unwrap();
            assert_eq!(lex_max_content(&p.cells()), p);
            assert_eq!(leading_coefficient(&p.cells()), 1);
        }
        assert!(lex_max_content(&CellSet::new()).is_empty());
        assert_eq!(leading_coefficient(&CellSet::new()), 1);
    }
}
