//! Expansion of `Q_{λ/μ}` in the `Q_ν` basis by counting amenable tableaux,
//! the monomial expansion used as ground truth, the closed forms for
//! `Q_{λ/(n)}`, and the tableau flip onto the orthogonal transpose.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use crate::amenability::amenable_letters;
use crate::canonical::lex_max_content;
use crate::error::{Error, Result};
use crate::shapes::{
    border, border_substrips, corner_removals, first_box, last_box, shifted_cells, BorderStrip,
    Cell, CellSet, OtTransform, SkewShape, StrictPartition,
};
use crate::tableaux::{content_of, for_each_tableau, Letter, ShapeIndex, Tableau};

/// A finite sum `Σ f_ν Q_ν`. An invalid shape gives the zero expansion,
/// which is distinct from the empty shape's `1 = Q_∅`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct QExpansion {
    terms: BTreeMap<StrictPartition, u64>,
    valid: bool,
}

impl QExpansion {
    pub fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
            valid: false,
        }
    }

    pub fn one() -> Self {
        Self::from_terms([(StrictPartition::empty(), 1)])
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (StrictPartition, u64)>) -> Self {
        let mut e = Self {
            terms: BTreeMap::new(),
            valid: true,
        };
        for (nu, c) in terms {
            e.add(nu, c);
        }
        e
    }

    fn add(&mut self, nu: StrictPartition, c: u64) {
        if c == 0 {
            return;
        }
        let slot = self.terms.entry(nu).or_insert(0);
        *slot = slot.checked_add(c).expect("coefficient overflow");
    }

    pub fn terms(&self) -> &BTreeMap<StrictPartition, u64> {
        &self.terms
    }

    pub fn coefficient(&self, nu: &StrictPartition) -> u64 {
        self.terms.get(nu).copied().unwrap_or(0)
    }

    /// False only for the expansion of a shape whose inner diagram does
    /// not fit in the outer one.
    pub fn is_valid(&self) -> bool {
        self.valid
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `(k, ν)` when the expansion is `k·Q_ν`.
    pub fn single_term(&self) -> Option<(u64, &StrictPartition)> {
        match self.terms.len() {
            1 => self.terms.iter().next().map(|(nu, &k)| (k, nu)),
            _ => None,
        }
    }

    /// Terms ordered lexicographically descending.
    pub fn descending(&self) -> impl Iterator<Item = (&StrictPartition, u64)> {
        self.terms.iter().rev().map(|(nu, &c)| (nu, c))
    }

    /// One `<coefficient> <ν>` line per term.
    pub fn machine(&self) -> String {
        if !self.valid {
            return "ZERO".into();
        }
        if self.terms.len() == 1 && self.coefficient(&StrictPartition::empty()) == 1 {
            return "EMPTY_SHAPE 1".into();
        }
        let lines: Vec<String> = self
            .descending()
            .map(|(nu, c)| format!("{c} {nu}"))
            .collect();
        lines.join("\n")
    }
}

impl fmt::Display for QExpansion {
    /// `2·Q[5,3,2,1] + Q[4,1]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (nu, c)) in self.descending().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if c != 1 {
                write!(f, "{c}·")?;
            }
            write!(f, "Q[{nu}]")?;
        }
        Ok(())
    }
}

/// A polynomial in `vars` variables, keyed by exponent vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialPolynomial {
    pub vars: usize,
    pub terms: BTreeMap<Vec<u32>, u64>,
}

impl MonomialPolynomial {
    pub fn zero(vars: usize) -> Self {
        Self {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: usize) -> Self {
        Self {
            vars,
            terms: BTreeMap::from([(vec![0; vars], 1)]),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exponents: &[u32]) -> u64 {
        self.terms.get(exponents).copied().unwrap_or(0)
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.vars, other.vars);
        let mut out = Self::zero(self.vars);
        for (a, &ca) in &self.terms {
            for (b, &cb) in &other.terms {
                let e: Vec<u32> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                let c = ca.checked_mul(cb).expect("coefficient overflow");
                let slot = out.terms.entry(e).or_insert(0);
                *slot = slot.checked_add(c).expect("coefficient overflow");
            }
        }
        out
    }

    /// `self + scale·other`.
    pub fn add_scaled(&mut self, other: &Self, scale: u64) {
        assert_eq!(self.vars, other.vars);
        if scale == 0 {
            return;
        }
        for (e, &c) in &other.terms {
            let c = c.checked_mul(scale).expect("coefficient overflow");
            let slot = self.terms.entry(e.clone()).or_insert(0);
            *slot = slot.checked_add(c).expect("coefficient overflow");
        }
    }
}

/// Counts `x^{c(T)}` over the tableaux of one cell set.
fn monomials_of_cells(cells: &CellSet, m: usize) -> MonomialPolynomial {
    let index = ShapeIndex::new(cells);
    let mut out = MonomialPolynomial::zero(m);
    if m <= 16 && cells.len() < 256 {
        let mut packed: HashMap<u128, u64> = HashMap::new();
        for_each_tableau(&index, m as u32, |w| {
            let key = w
                .iter()
                .fold(0u128, |k, l| k + (1u128 << (8 * (l.value() - 1))));
            *packed.entry(key).or_insert(0) += 1;
        });
        for (key, c) in packed {
            let e = (0..m).map(|i| ((key >> (8 * i)) & 0xff) as u32).collect();
            out.terms.insert(e, c);
        }
    } else {
        for_each_tableau(&index, m as u32, |w| {
            let mut e = vec![0u32; m];
            for l in w {
                e[l.value() as usize - 1] += 1;
            }
            *out.terms.entry(e).or_insert(0) += 1;
        });
    }
    out
}

/// `Σ_T x^{c(T)}` over all tableaux with values at most `m`. Rows and
/// columns never cross components, so the sum factors over components.
pub fn monomial_oracle(shape: &SkewShape, m: usize) -> MonomialPolynomial {
    let Ok(cells) = shape.cells() else {
        return MonomialPolynomial::zero(m);
    };
    monomial_oracle_cells(&cells, m)
}

pub fn monomial_oracle_cells(cells: &CellSet, m: usize) -> MonomialPolynomial {
    cells
        .components()
        .iter()
        .fold(MonomialPolynomial::one(m), |acc, comp| {
            acc.mul(&monomials_of_cells(comp, m))
        })
}

/// Depth-first search over amenable tableaux. Boxes are filled in reverse
/// reading order, which is the order of the right-to-left scan, so
/// condition (a) of amenability prunes every partial filling.
struct AmenableSearch<'a> {
    shape: &'a ShapeIndex,
    max_code: u8,
    target: Option<&'a [u32]>,
    codes: Vec<Letter>,
    unmarked: Vec<u32>,
    total: Vec<u32>,
}

impl<'a> AmenableSearch<'a> {
    fn new(shape: &'a ShapeIndex, max_value: u32, target: Option<&'a [u32]>) -> Self {
        let max_value = max_value.min(Letter::MAX_VALUE);
        Self {
            shape,
            max_code: (2 * max_value) as u8,
            target,
            codes: vec![Letter::from_code(0); shape.len()],
            unmarked: vec![0; max_value as usize + 2],
            total: vec![0; max_value as usize + 2],
        }
    }

    fn run(&mut self, f: &mut dyn FnMut(&[Letter])) {
        let n = self.codes.len();
        self.rec(n, f);
    }

    fn rec(&mut self, remaining: usize, f: &mut dyn FnMut(&[Letter])) {
        if remaining == 0 {
            if amenable_letters(&self.codes) {
                f(&self.codes);
            }
            return;
        }
        let i = remaining - 1;
        let (lo, hi) = self.shape.reverse_bounds(i, &self.codes, self.max_code);
        for code in lo..=hi {
            let l = Letter::from_code(code);
            let v = l.value() as usize;
            if v >= 2 && self.unmarked[v - 1] <= self.unmarked[v] {
                continue;
            }
            if let Some(t) = self.target {
                if self.total[v] >= t[v - 1] {
                    continue;
                }
            }
            self.codes[i] = l;
            self.total[v] += 1;
            if !l.is_marked() {
                self.unmarked[v] += 1;
            }
            self.rec(i, f);
            self.total[v] -= 1;
            if !l.is_marked() {
                self.unmarked[v] -= 1;
            }
        }
        self.codes[i] = Letter::from_code(0);
    }
}

/// Calls `f` on every amenable tableau of `cells` (letters in reading
/// order), optionally restricted to one content.
pub(crate) fn for_each_amenable(
    index: &ShapeIndex,
    target: Option<&[u32]>,
    f: &mut dyn FnMut(&[Letter]),
) {
    let max_value = match target {
        Some(t) => t.len() as u32,
        None => index.len() as u32,
    };
    if let Some(t) = target {
        if t.iter().map(|&x| x as usize).sum::<usize>() != index.len() {
            return;
        }
    }
    AmenableSearch::new(index, max_value, target).run(f);
}

/// All amenable tableaux on `cells`, optionally of one content.
pub fn amenable_tableaux(cells: &CellSet, content: Option<&StrictPartition>) -> Vec<Tableau> {
    let index = Arc::new(ShapeIndex::new(cells));
    let mut out = Vec::new();
    for_each_amenable(&index, content.map(|c| c.parts()), &mut |w| {
        out.push(Tableau::from_letters(index.clone(), w.to_vec()).expect("search yields tableaux"))
    });
    out
}

/// `f^λ_{μν}`: the number of amenable tableaux of shape `λ/μ` and content `ν`.
pub fn lr_coefficient(shape: &SkewShape, nu: &StrictPartition) -> Result<u64> {
    let Ok(cells) = shape.cells() else {
        return Ok(0);
    };
    lr_coefficient_cells(&cells, nu)
}

pub fn lr_coefficient_cells(cells: &CellSet, nu: &StrictPartition) -> Result<u64> {
    if nu.size() as usize != cells.len() {
        return Err(Error::SizeMismatch {
            shape: cells.len(),
            partition: nu.size(),
        });
    }
    if *nu > lex_max_content(cells) {
        return Ok(0);
    }
    let index = ShapeIndex::new(cells);
    let mut count = 0u64;
    for_each_amenable(&index, Some(nu.parts()), &mut |_| count += 1);
    Ok(count)
}

/// `Q_{λ/μ} = Σ f^λ_{μν} Q_ν`.
pub fn expand(shape: &SkewShape) -> QExpansion {
    if !shape.is_valid() {
        return QExpansion::zero();
    }
    let basic = shape.normalize_basic().expect("a valid shape normalizes");
    expand_cells(&basic.cells().expect("basic shapes are valid"))
}

pub fn expand_cells(cells: &CellSet) -> QExpansion {
    if cells.is_empty() {
        return QExpansion::one();
    }
    let index = ShapeIndex::new(cells);
    let mut by_content: HashMap<Vec<u32>, u64> = HashMap::new();
    for_each_amenable(&index, None, &mut |w| {
        *by_content.entry(content_of(w).total).or_insert(0) += 1;
    });
    QExpansion::from_terms(by_content.into_iter().map(|(c, k)| {
        let nu = StrictPartition::new(c).expect("amenable contents are strict partitions");
        (nu, k)
    }))
}

/// `Q_{λ/(n)} = Σ 2^(comp(D_{λ/ν}) - 1) Q_ν` over `D_{λ/ν} ⊆ B_λ` with `n` boxes.
pub fn decompose_row_strip(lambda: &StrictPartition, n: u32) -> Result<QExpansion> {
    if n == 0 || n > lambda.part(1) {
        return Err(Error::OutOfRange(format!(
            "n = {n} must lie in 1..={} for {lambda}",
            lambda.part(1)
        )));
    }
    Ok(QExpansion::from_terms(
        border_substrips(lambda, n).into_iter().map(|s| {
            let comps = s.cells().expect("substrips are valid").component_count();
            (s.inner().clone(), 1u64 << (comps - 1))
        }),
    ))
}

/// `Q_{λ/(1)} = Σ_{ν ∈ E_λ} Q_ν`.
pub fn decompose_single_box(lambda: &StrictPartition) -> QExpansion {
    QExpansion::from_terms(corner_removals(lambda).into_iter().map(|nu| (nu, 1)))
}

/// `Q_{λ/(λ_1 - 1)} = Σ_{(x,y) ∈ B×_λ} c^{(x,y)} Q_{D_μ ∪ {(x,y)}}` with
/// `D_μ = D_λ ∖ B_λ`.
pub fn decompose_border_minus_one(lambda: &StrictPartition) -> Result<QExpansion> {
    if lambda.part(1) < 2 {
        return Err(Error::OutOfRange(format!("{lambda} needs λ_1 ≥ 2")));
    }
    let b = border(lambda);
    let strip = BorderStrip::new(b.clone())?;
    let inner = shifted_cells(lambda).difference(&b);
    let crosses = b
        .iter()
        .filter(|&c| !b.contains(c.up()) && !b.contains(c.left()));
    let mut terms = Vec::new();
    for c in crosses {
        let coef = if c == strip.first() || c == strip.last() {
            1
        } else {
            2
        };
        let mut cells = inner.clone();
        cells.insert(c);
        let shape = SkewShape::from_cells(&cells)?;
        if !shape.inner().is_empty() {
            return Err(Error::NotRealizable(cells.to_string()));
        }
        terms.push((shape.outer().clone(), coef));
    }
    Ok(QExpansion::from_terms(terms))
}

/// Moves a tableau onto the orthogonal transpose of its shape. Value `i`
/// becomes `a + b - i` (`a`, `b` the least and greatest values present); a
/// box whose lower neighbor stays in its band becomes marked, one whose
/// left neighbor does becomes unmarked, and the remaining box of the k-th
/// component from the left copies the marking of the last box of the k-th
/// component of the original band.
pub fn lambda_flip(t: &Tableau) -> Result<Tableau> {
    let Some(ot) = OtTransform::for_cells(t.cells()) else {
        return Ok(Tableau::empty());
    };
    let reflected: BTreeMap<Cell, Letter> = t.iter().map(|(c, l)| (ot.apply(c), l)).collect();
    let a = t.letters().iter().map(|l| l.value()).min().unwrap();
    let b = t.max_value();
    let mut out = BTreeMap::new();
    for i in a..=b {
        let band: CellSet = reflected
            .iter()
            .filter(|(_, l)| l.value() == i)
            .map(|(&c, _)| c)
            .collect();
        if band.is_empty() {
            continue;
        }
        let new_value = a + b - i;
        let original_lasts: Vec<Letter> = t
            .band(i)
            .components()
            .iter()
            .map(|comp| t.get(last_box(comp).expect("nonempty component")).unwrap())
            .collect();
        let mut loose: Vec<Cell> = Vec::new();
        for c in band.iter() {
            if band.contains(c.down()) {
                out.insert(c, Letter::marked(new_value));
            } else if band.contains(c.left()) {
                out.insert(c, Letter::unmarked(new_value));
            } else {
                loose.push(c);
            }
        }
        loose.sort_by_key(|c| c.col);
        if loose.len() != original_lasts.len() {
            return Err(Error::InvalidTableau(format!(
                "band {i}: {} free boxes for {} components",
                loose.len(),
                original_lasts.len()
            )));
        }
        for (c, l) in loose.into_iter().zip(original_lasts) {
            out.insert(c, Letter::new(new_value, l.is_marked()));
        }
    }
    let cells: CellSet = out.keys().copied().collect();
    debug_assert!(first_box(&cells).is_some());
    Tableau::new(&cells, &out)
}
