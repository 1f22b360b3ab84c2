//! Deciding whether `Q_{λ/μ}` is a multiple of a single `Q_ν`, and
//! explicit amenable tableaux certifying a second term when it is not.

use std::collections::BTreeMap;
use std::fmt;

use crate::amenability::is_amenable;
use crate::canonical::{bands_from, canonical_tableau, tableau_from_bands, CanonicalTableau};
use crate::error::{Error, Result};
use crate::shapes::{
    first_box, last_box, orthogonal_transpose_cells, partition_difference, Cell, CellSet,
    SkewShape, StrictPartition,
};
use crate::tableaux::{Letter, Tableau};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    I,
    II,
    III,
    IV,
    V,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::I => "i",
            Family::II => "ii",
            Family::III => "iii",
            Family::IV => "iv",
            Family::V => "v",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Lemma {
    Hom1,
    Hom2,
    Hom4,
    Hom5,
    Comps1,
    Comps2,
}

impl Lemma {
    pub fn name(self) -> &'static str {
        match self {
            Lemma::Hom1 => "hom1",
            Lemma::Hom2 => "hom2",
            Lemma::Hom4 => "hom4",
            Lemma::Hom5 => "hom5",
            Lemma::Comps1 => "comps1",
            Lemma::Comps2 => "comps2",
        }
    }
}

impl fmt::Display for Lemma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// An amenable tableau whose content differs from `c(T_{λ/μ})`. When
/// `transposed` is set it lives on the orthogonal transpose, which has
/// the same Q-function.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub lemma: Lemma,
    pub transposed: bool,
    pub tableau: Tableau,
    pub content: StrictPartition,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Homogeneous {
        k: u64,
        nu: StrictPartition,
        family: Family,
    },
    NotHomogeneous {
        witness: Option<Witness>,
        second_content: Option<StrictPartition>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationResult {
    /// The basic shape the verdict refers to.
    pub shape: SkewShape,
    pub verdict: Verdict,
}

impl ClassificationResult {
    pub fn is_homogeneous(&self) -> bool {
        matches!(self.verdict, Verdict::Homogeneous { .. })
    }

    pub fn witness(&self) -> Option<&Witness> {
        match &self.verdict {
            Verdict::NotHomogeneous { witness, .. } => witness.as_ref(),
            _ => None,
        }
    }
}

impl fmt::Display for ClassificationResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.verdict {
            Verdict::Homogeneous { k, nu, family } => {
                write!(f, "HOMOGENEOUS k={k} nu={nu} family={family}")
            }
            Verdict::NotHomogeneous {
                second_content: Some(c),
                ..
            } => write!(f, "NOT_HOMOGENEOUS second_content={c}"),
            Verdict::NotHomogeneous { .. } => f.write_str("NOT_HOMOGENEOUS"),
        }
    }
}

/// `(q, q-1, ..., 1)` gives `Some(q)`.
fn staircase_length(p: &StrictPartition) -> Option<u32> {
    p.is_staircase().then(|| p.len() as u32)
}

/// `p+q, p+q-2, ...` down to `max(p-q, q-p+2)`.
fn alternating_tail(p: u32, q: u32) -> Vec<u32> {
    let (p, q) = (p as i64, q as i64);
    let stop = (p - q).max(q - p + 2);
    let mut out = Vec::new();
    let mut x = p + q;
    while x >= stop {
        out.push(x as u32);
        x -= 2;
    }
    out
}

/// Matches a basic shape against the five homogeneous families.
pub fn match_family(basic: &SkewShape) -> Option<(u64, StrictPartition, Family)> {
    let (lambda, mu) = (basic.outer(), basic.inner());
    if mu.is_empty() {
        return Some((1, lambda.clone(), Family::I));
    }
    if let Some(r) = staircase_length(lambda) {
        if (mu.len() as u32) < r.saturating_sub(1) {
            if let Ok(nu) = partition_difference(lambda, mu) {
                return Some((1, nu, Family::II));
            }
        }
    }
    if let Some(q) = staircase_length(mu) {
        if lambda.is_consecutive() && lambda.len() as u32 > q {
            let p = lambda.part(lambda.len());
            let r = lambda.len() as u32 - q - 1;
            let mut nu: Vec<u32> = (1..=r).map(|i| lambda.part(i as usize)).collect();
            nu.extend(alternating_tail(p, q));
            let nu = StrictPartition::new(nu).expect("family parts decrease");
            let family = if r > 0 { Family::III } else { Family::IV };
            return Some((1, nu, family));
        }
    }
    let r = lambda.len() as u32 - 1;
    if r >= 1
        && lambda.part(1) == r + 2
        && lambda.parts()[1..] == *StrictPartition::staircase(r).parts()
        && mu.parts() == [r + 1]
    {
        let mut nu = vec![r + 1];
        nu.extend((1..r).rev());
        return Some((2, StrictPartition::new(nu).unwrap(), Family::V));
    }
    None
}

pub fn classify(shape: &SkewShape) -> Result<ClassificationResult> {
    if !shape.is_valid() {
        return Err(Error::InvalidShape {
            outer: shape.outer().to_string(),
            inner: shape.inner().to_string(),
        });
    }
    let basic = shape.normalize_basic()?;
    if let Some((k, nu, family)) = match_family(&basic) {
        return Ok(ClassificationResult {
            shape: basic,
            verdict: Verdict::Homogeneous { k, nu, family },
        });
    }
    let cells = basic.cells()?;
    let witness = if cells.component_count() > 1 {
        disconnected_witness(&cells)?
    } else if has_disconnected_band(&cells) {
        connected_witness(&cells)?
    } else {
        None
    };
    if witness.is_none() {
        log::debug!("{basic}: outside every family but no lemma applies");
    }
    let second_content = witness.as_ref().map(|w| w.content.clone());
    Ok(ClassificationResult {
        shape: basic,
        verdict: Verdict::NotHomogeneous {
            witness,
            second_content,
        },
    })
}

fn basic_cells(shape: &SkewShape) -> Result<CellSet> {
    if !shape.is_valid() {
        return Err(Error::InvalidShape {
            outer: shape.outer().to_string(),
            inner: shape.inner().to_string(),
        });
    }
    shape.normalize_basic()?.cells()
}

/// The hom1/hom2/hom4/hom5 constructions, in that order.
pub fn witness_disconnected(shape: &SkewShape) -> Result<Option<Witness>> {
    let cells = basic_cells(shape)?;
    if cells.component_count() < 2 {
        return Err(Error::PreconditionViolated(format!("{shape} is connected")));
    }
    disconnected_witness(&cells)
}

/// The comps1/comps2 constructions for the first disconnected band.
pub fn witness_connected(shape: &SkewShape) -> Result<Option<Witness>> {
    let cells = basic_cells(shape)?;
    if cells.component_count() != 1 {
        return Err(Error::PreconditionViolated(format!(
            "{shape} is disconnected"
        )));
    }
    if !has_disconnected_band(&cells) {
        return Err(Error::PreconditionViolated(format!(
            "every band of {shape} is connected"
        )));
    }
    connected_witness(&cells)
}

/// Requires `λ = (r, ..., 1)`; returns `λ ∖ μ`.
pub fn staircase_reduce(shape: &SkewShape) -> Result<StrictPartition> {
    if !shape.outer().is_staircase() {
        return Err(Error::PreconditionViolated(format!(
            "{} is not a staircase",
            shape.outer()
        )));
    }
    partition_difference(shape.outer(), shape.inner())
}

fn has_disconnected_band(cells: &CellSet) -> bool {
    bands_from(cells, None)
        .iter()
        .skip(1)
        .any(|b| b.component_count() > 1)
}

fn describe(cells: &CellSet) -> String {
    SkewShape::from_cells(cells)
        .map(|s| s.to_string())
        .unwrap_or_else(|_| cells.to_string())
}

fn failed(lemma: Lemma, cells: &CellSet, reason: impl Into<String>) -> Error {
    Error::WitnessFailed {
        lemma: lemma.name(),
        shape: describe(cells),
        reason: reason.into(),
    }
}

/// Builds the modified tableau and checks it: valid, amenable, content
/// different from `ν` and equal to `expected` when the lemma predicts it.
fn certify(
    lemma: Lemma,
    transposed: bool,
    cells: &CellSet,
    entries: &BTreeMap<Cell, Letter>,
    nu: &StrictPartition,
    expected: Option<Vec<u32>>,
) -> Result<Witness> {
    let tableau = Tableau::new(cells, entries).map_err(|e| failed(lemma, cells, e.to_string()))?;
    if !is_amenable(&tableau) {
        return Err(failed(lemma, cells, format!("not amenable:\n{tableau}")));
    }
    let content = tableau
        .content()
        .as_strict_partition()
        .ok_or_else(|| failed(lemma, cells, "content is not a strict partition"))?;
    if content == *nu {
        return Err(failed(lemma, cells, "content equals the leading content"));
    }
    if let Some(want) = expected {
        let want = StrictPartition::new(want.into_iter().filter(|&x| x > 0).collect()).ok();
        if want.as_ref() != Some(&content) {
            return Err(failed(
                lemma,
                cells,
                format!("content {content} differs from the predicted one"),
            ));
        }
    }
    Ok(Witness {
        lemma,
        transposed,
        tableau,
        content,
    })
}

fn shifted_content(nu: &StrictPartition, down: usize, up: usize) -> Vec<u32> {
    let mut v = nu.parts().to_vec();
    v.resize(v.len().max(up + 1), 0);
    v[down] -= 1;
    v[up] += 1;
    v
}

fn rightmost_of_lowest_row(cells: &CellSet) -> Option<Cell> {
    let r = cells.max_row()?;
    cells.row(r).last()
}

fn hom1(cells: &CellSet, canon: &CanonicalTableau) -> Option<BTreeMap<Cell, Letter>> {
    let p1 = &canon.bands[0];
    let comp = cells
        .components()
        .into_iter()
        .skip(1)
        .find(|c| c.min_row() != c.max_row())?;
    let meet: CellSet = comp.iter().filter(|&c| p1.contains(c)).collect();
    let c = rightmost_of_lowest_row(&meet)?;
    let mut entries = canon.tableau.entries();
    entries.insert(c, Letter::unmarked(2));
    entries.insert(c.up(), Letter::unmarked(1));
    Some(entries)
}

fn hom2(cells: &CellSet, canon: &CanonicalTableau) -> Option<BTreeMap<Cell, Letter>> {
    let comps = cells.components();
    if comps.len() < 3 {
        return None;
    }
    let meet: CellSet = comps[1]
        .iter()
        .filter(|&c| canon.bands[0].contains(c))
        .collect();
    let c = rightmost_of_lowest_row(&meet)?;
    let mut entries = canon.tableau.entries();
    entries.insert(c, Letter::unmarked(2));
    Some(entries)
}

fn rerun_without(cells: &CellSet, p1: &CellSet, drop: Cell) -> Option<BTreeMap<Cell, Letter>> {
    let mut first = p1.clone();
    first.remove(drop);
    let bands = bands_from(cells, Some(&first));
    tableau_from_bands(cells, &bands).ok().map(|t| t.entries())
}

fn hom4(cells: &CellSet, canon: &CanonicalTableau) -> Option<BTreeMap<Cell, Letter>> {
    let c1 = cells.components().into_iter().next()?;
    let left = c1.min_col()?;
    if c1.column(left).count() < 2 {
        return None;
    }
    let p1 = &canon.bands[0];
    let meet: CellSet = c1.iter().filter(|&c| p1.contains(c)).collect();
    rerun_without(cells, p1, last_box(&meet)?)
}

fn hom5(cells: &CellSet, canon: &CanonicalTableau) -> Option<BTreeMap<Cell, Letter>> {
    let c1 = cells.components().into_iter().next()?;
    let left = c1.min_col()?;
    let top = c1.column(left).next()?.row;
    if c1.min_row()? >= top {
        return None;
    }
    let p1 = &canon.bands[0];
    rerun_without(cells, p1, rightmost_of_lowest_row(p1)?)
}

fn disconnected_witness(cells: &CellSet) -> Result<Option<Witness>> {
    let canon = canonical_tableau(cells)?;
    let nu = canon.content();
    let ot = orthogonal_transpose_cells(cells);
    let ot_canon = canonical_tableau(&ot)?;
    let predicted = shifted_content(&nu, 0, 1);

    if let Some(e) = hom1(cells, &canon) {
        return certify(Lemma::Hom1, false, cells, &e, &nu, Some(predicted)).map(Some);
    }
    if let Some(e) = hom1(&ot, &ot_canon) {
        return certify(Lemma::Hom1, true, &ot, &e, &nu, Some(predicted)).map(Some);
    }
    if let Some(e) = hom2(cells, &canon) {
        return certify(Lemma::Hom2, false, cells, &e, &nu, Some(predicted)).map(Some);
    }
    let sides = [(false, cells, &canon), (true, &ot, &ot_canon)];
    for (transposed, d, c) in sides {
        if let Some(e) = hom4(d, c) {
            return certify(Lemma::Hom4, transposed, d, &e, &nu, None).map(Some);
        }
    }
    for (transposed, d, c) in sides {
        if let Some(e) = hom5(d, c) {
            return certify(Lemma::Hom5, transposed, d, &e, &nu, None).map(Some);
        }
    }
    Ok(None)
}

fn lowest_in_column(band: &CellSet, col: i32) -> Option<Cell> {
    band.column(col).last()
}

fn comps1(canon: &CanonicalTableau, i: usize, v: i32) -> Option<BTreeMap<Cell, Letter>> {
    let s = lowest_in_column(&canon.bands[i - 2], v - 1)?;
    let mut entries = canon.tableau.entries();
    entries.insert(s, Letter::unmarked(i as u32));
    entries.insert(s.up(), Letter::unmarked(i as u32 - 1));
    Some(entries)
}

fn comps2(canon: &CanonicalTableau, i: usize, y: i32) -> Option<BTreeMap<Cell, Letter>> {
    let t = &canon.tableau;
    let s = lowest_in_column(&canon.bands[i - 1], y)?;
    let prev = Letter::unmarked(i as u32 - 1);
    let top = t.cells().column(y).find(|&c| t.get(c) == Some(prev))?.row;
    let mut entries = t.entries();
    for a in top - 1..s.row {
        let c = Cell::new(a, y);
        entries.insert(c, t.get(c.down())?);
    }
    let next_marked = canon.bands.get(i).is_some_and(|b| b.contains(s.down()));
    entries.insert(s, Letter::new(i as u32 + 1, next_marked));
    Some(entries)
}

fn connected_witness(cells: &CellSet) -> Result<Option<Witness>> {
    let canon = canonical_tableau(cells)?;
    let nu = canon.content();
    for i in 2..=canon.bands.len() {
        let comps = canon.bands[i - 1].components();
        for pair in comps.windows(2) {
            let y = first_box(&pair[0]).expect("nonempty component").col;
            let v = last_box(&pair[1]).expect("nonempty component").col;
            if v >= y + 2 {
                let e = comps1(&canon, i, v)
                    .ok_or_else(|| failed(Lemma::Comps1, cells, "construction undefined"))?;
                let predicted = shifted_content(&nu, i - 2, i - 1);
                return certify(Lemma::Comps1, false, cells, &e, &nu, Some(predicted)).map(Some);
            }
            if v == y + 1 {
                let e = comps2(&canon, i, y)
                    .ok_or_else(|| failed(Lemma::Comps2, cells, "construction undefined"))?;
                let predicted = shifted_content(&nu, i - 2, i);
                return certify(Lemma::Comps2, false, cells, &e, &nu, Some(predicted)).map(Some);
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expansion::expand;
    use crate::shapes::strict_partitions;

    fn shape(s: &str) -> SkewShape {
        s.parse().unwrap()
    }

    fn p(s: &str) -> StrictPartition {
        s.parse().unwrap()
    }

    /// Rows written with `:` for each blank leading position, as in the
    /// usual skew-tableau pictures; placed at the leftmost columns that
    /// give a shifted skew shape.
    fn young(rows: &[&str]) -> Tableau {
        let parsed: Vec<(i32, Vec<Letter>)> = rows
            .iter()
            .map(|r| {
                let offset = r.chars().take_while(|&c| c == ':').count() as i32;
                let letters = r[offset as usize..]
                    .split_whitespace()
                    .map(|t| t.parse().unwrap())
                    .collect();
                (offset, letters)
            })
            .collect();
        for base in 1..40 {
            let mut entries = BTreeMap::new();
            for (i, (offset, letters)) in parsed.iter().enumerate() {
                for (j, &l) in letters.iter().enumerate() {
                    entries.insert(Cell::new(i as i32 + 1, base + offset + j as i32), l);
                }
            }
            let cells: CellSet = entries.keys().copied().collect();
            if SkewShape::from_cells(&cells).is_ok() {
                return Tableau::new(&cells, &entries).unwrap();
            }
        }
        panic!("no placement for {rows:?}");
    }

    fn witness_for(before: &Tableau) -> Witness {
        let s = SkewShape::from_cells(before.cells()).unwrap();
        assert_eq!(
            canonical_tableau(before.cells()).unwrap().tableau,
            *before,
            "canonical tableau of {s}"
        );
        classify(&s).unwrap().witness().cloned().unwrap()
    }

    #[test]
    fn family_examples() {
        let r = classify(&shape("6,4,3,2,1/5")).unwrap();
        assert_eq!(
            r.verdict,
            Verdict::Homogeneous {
                k: 2,
                nu: p("5,3,2,1"),
                family: Family::V
            }
        );
        let r = classify(&shape("5,4,3,2,1/5,3,2")).unwrap();
        assert_eq!(r.to_string(), "HOMOGENEOUS k=1 nu=4,1 family=ii");
        let r = classify(&shape("7,5,2")).unwrap();
        assert_eq!(r.to_string(), "HOMOGENEOUS k=1 nu=7,5,2 family=i");
        assert!(witness_disconnected(&shape("6,4,3,2,1/5"))
            .unwrap()
            .is_none());
        assert!(classify(&shape("2/3")).is_err());
    }

    #[test]
    fn family_formulas_match_leading_content() {
        for p_ in 1..=4u32 {
            for q in 1..=4u32 {
                for r in 0..=4u32 {
                    let lambda = StrictPartition::new((p_..=p_ + q + r).rev().collect()).unwrap();
                    let mu = StrictPartition::staircase(q);
                    let s = SkewShape::new(lambda, mu);
                    let (k, nu, family) = match_family(&s).unwrap();
                    assert_eq!(k, 1);
                    if p_ > 1 || family != Family::II {
                        assert_eq!(family, if r > 0 { Family::III } else { Family::IV });
                    }
                    let cells = s.cells().unwrap();
                    assert_eq!(nu, crate::canonical::lex_max_content(&cells), "{s}");
                }
            }
        }
    }

    #[test]
    fn staircase_examples() {
        assert_eq!(
            staircase_reduce(&shape("5,4,3,2,1/5,3,2")).unwrap(),
            p("4,1")
        );
        assert_eq!(staircase_reduce(&shape("3,2,1/2")).unwrap(), p("3,1"));
        assert_eq!(staircase_reduce(&shape("4,3,2,1")).unwrap(), p("4,3,2,1"));
        assert!(staircase_reduce(&shape("4,2,1/2")).is_err());
        assert_eq!(
            expand(&shape("3,2,1/2")),
            crate::expansion::QExpansion::from_terms([(p("3,1"), 1)])
        );
    }

    #[test]
    fn hom1_on_small_shape() {
        let s = shape("6,5,2,1/4,3");
        let w = witness_disconnected(&s).unwrap().unwrap();
        assert_eq!(w.lemma, Lemma::Hom1);
        assert!(!w.transposed);
        assert_eq!(w.tableau.get(Cell::new(2, 5)), Some(Letter::unmarked(2)));
        assert_eq!(w.tableau.get(Cell::new(1, 5)), Some(Letter::unmarked(1)));
        assert_eq!(w.content, p("4,3"));
        assert_eq!(expand(&s).coefficient(&p("5,2")), 4);
    }

    #[test]
    fn hom1_example() {
        let before = young(&["::::1' 1", ":::1 1 2", "1' 1 1", "1 2' 2", ":2"]);
        let after = young(&["::::1 1", ":::1 2 2", "1' 1 1", "1 2' 2", ":2"]);
        let w = witness_for(&before);
        assert_eq!((w.lemma, w.transposed), (Lemma::Hom1, false));
        assert_eq!(w.tableau, after);
    }

    #[test]
    fn hom2_example() {
        let before = young(&[":::::1", ":::1' 1", ":::1 2", "1' 1 1", "1 2' 2", ":2"]);
        let after = young(&[":::::1", ":::1' 1", ":::2 2", "1' 1 1", "1 2' 2", ":2"]);
        let cells = before.cells().clone();
        let canon = canonical_tableau(&cells).unwrap();
        assert_eq!(canon.tableau, before);
        let nu = canon.content();
        let e = hom2(&cells, &canon).unwrap();
        let w = certify(
            Lemma::Hom2,
            false,
            &cells,
            &e,
            &nu,
            Some(shifted_content(&nu, 0, 1)),
        )
        .unwrap();
        assert_eq!(w.tableau, after);
        assert!(classify(&SkewShape::from_cells(&cells).unwrap())
            .unwrap()
            .witness()
            .is_some());
    }

    #[test]
    fn hom4_example() {
        let before = young(&[":::1' 1", ":::1 2", "1' 1 1", "1' 2' 2", "1 2' 3", ":2"]);
        let after = young(&[":::1' 1", ":::1 2", "1' 1 1", "1 2' 2", "2 2 3", ":3"]);
        let cells = before.cells().clone();
        let canon = canonical_tableau(&cells).unwrap();
        assert_eq!(canon.tableau, before);
        let e = hom4(&cells, &canon).unwrap();
        let w = certify(Lemma::Hom4, false, &cells, &e, &canon.content(), None).unwrap();
        assert_eq!(w.tableau, after);
    }

    #[test]
    fn hom5_example() {
        let before = young(&["::::1' 1", "::::1 2", "::1' 1", "1 1 1 2'", ":2 2 2"]);
        let after = young(&["::::1' 1", "::::1 2", "::1 1", "1 1 2' 2", ":2 2 3"]);
        let cells = before.cells().clone();
        let canon = canonical_tableau(&cells).unwrap();
        assert_eq!(canon.tableau, before);
        let e = hom5(&cells, &canon).unwrap();
        let w = certify(Lemma::Hom5, false, &cells, &e, &canon.content(), None).unwrap();
        assert_eq!(w.tableau, after);
    }

    #[test]
    fn comps1_example() {
        let before = young(&["::1' 1 1", "::1' 2 2", "1' 1 1", "1' 2'", "1 2"]);
        let after = young(&["::1' 1 1", "::1 2 2", "1' 1 2", "1' 2'", "1 2"]);
        assert_eq!(
            SkewShape::from_cells(before.cells()).unwrap(),
            shape("9,8,5,3,2/6,5,2,1")
        );
        let w = witness_for(&before);
        assert_eq!(w.lemma, Lemma::Comps1);
        assert_eq!(w.tableau, after);
        assert_eq!(
            witness_connected(&shape("9,8,5,3,2/6,5,2,1"))
                .unwrap()
                .unwrap(),
            w
        );
    }

    #[test]
    fn comps2_example() {
        let before = young(&[
            ":::1' 1 1 1",
            ":::1' 2' 2 2",
            "::1' 1 2 3 3",
            "::1' 2'",
            "1 1 1 2'",
            ":2 2 2",
            "::3 3",
        ]);
        let after = young(&[
            ":::1' 1 1 1",
            ":::1 2' 2 2",
            "::1' 2' 2 3 3",
            "::1' 2'",
            "1 1 1 2",
            ":2 2 3'",
            "::3 3",
        ]);
        assert_eq!(
            SkewShape::from_cells(before.cells()).unwrap(),
            shape("11,10,9,5,4,3,2/7,6,4,3")
        );
        let w = witness_for(&before);
        assert_eq!(w.lemma, Lemma::Comps2);
        assert_eq!(w.tableau, after);
    }

    #[test]
    fn connected_preconditions() {
        assert!(matches!(
            witness_connected(&shape("5,3,1")),
            Err(Error::PreconditionViolated(_))
        ));
        assert!(matches!(
            witness_disconnected(&shape("5,3,1")),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn three_component_shape_gets_hom2_content() {
        let mut shapes = Vec::new();
        for l in (1..=9).flat_map(strict_partitions) {
            for n in 0..l.size() {
                for m in crate::shapes::strict_partitions_inside(&l, n) {
                    shapes.push(SkewShape::new(l.clone(), m));
                }
            }
        }
        let found = shapes
            .into_iter()
            .find(|s| s.is_basic() && s.cells().unwrap().component_count() == 3)
            .unwrap();
        let w = witness_disconnected(&found).unwrap().unwrap();
        let nu = crate::canonical::lex_max_content(&found.cells().unwrap());
        if w.lemma == Lemma::Hom2 {
            assert_eq!(w.content.parts(), shifted_content(&nu, 0, 1).as_slice());
        }
        assert_ne!(w.content, nu);
    }
}
