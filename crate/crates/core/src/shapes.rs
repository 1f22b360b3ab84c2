//! Strict partitions, shifted and skew diagrams realized as explicit cell
//! sets, and the diagram-level constructions built on them: components,
//! corners, borders, removal of empty rows and columns, and the orthogonal
//! transpose.
//!
//! Coordinates follow matrix convention and are 1-indexed: `row` grows
//! downwards, `col` grows to the right. Row `i` of the shifted diagram of
//! `λ` occupies columns `i ..= i + λ_i - 1`.

use std::cmp::Ordering;
use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A partition with distinct parts, stored in decreasing order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct StrictPartition {
    parts: Vec<u32>,
}

impl StrictPartition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::NotStrict(parts));
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    /// The staircase `(r, r-1, ..., 1)`.
    pub fn staircase(r: u32) -> Self {
        Self {
            parts: (1..=r).rev().collect(),
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// The `i`-th part (1-indexed); zero past the last part.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// `D_other ⊆ D_self`.
    pub fn contains(&self, other: &StrictPartition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(m, l)| m <= l)
    }

    pub fn is_staircase(&self) -> bool {
        !self.is_empty() && *self.parts.last().unwrap() == 1 && self.is_consecutive()
    }

    /// Parts form a run of consecutive integers.
    pub fn is_consecutive(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] == w[1] + 1)
    }

    pub fn cells(&self) -> CellSet {
        shifted_cells(self)
    }
}

impl PartialOrd for StrictPartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for StrictPartition {
    fn cmp(&self, other: &Self) -> Ordering {
        lex_compare(self, other)
    }
}

/// Lexicographic order on partitions, missing parts read as zero.
pub fn lex_compare(a: &StrictPartition, b: &StrictPartition) -> Ordering {
    let n = a.len().max(b.len());
    for i in 1..=n {
        match a.part(i).cmp(&b.part(i)) {
            Ordering::Equal => continue,
            ord => return ord,
        }
    }
    Ordering::Equal
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for p in &self.parts {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for StrictPartition {
    type Err = Error;

    /// Comma-separated decreasing integers; `""` and `"0"` denote the empty
    /// partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "0" {
            return Ok(Self::empty());
        }
        let mut parts = Vec::new();
        for tok in s.split(',') {
            let tok = tok.trim();
            let p: u32 = tok
                .parse()
                .map_err(|_| Error::parse(tok, "expected a positive integer"))?;
            if p == 0 {
                return Err(Error::parse(tok, "parts must be positive"));
            }
            if let Some(&prev) = parts.last() {
                if p >= prev {
                    return Err(Error::parse(tok, "parts must be strictly decreasing"));
                }
            }
            parts.push(p);
        }
        Ok(Self { parts })
    }
}

/// All strict partitions of `n`, lexicographically descending.
pub fn strict_partitions(n: u32) -> Vec<StrictPartition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<StrictPartition>) {
        if rest == 0 {
            out.push(StrictPartition { parts: cur.clone() });
            return;
        }
        for p in (1..=max.min(rest)).rev() {
            // p + (p-1) + ... + 1 must reach the rest
            if p * (p + 1) / 2 < rest {
                break;
            }
            cur.push(p);
            rec(rest - p, p - 1, cur, out);
            cur.pop();
        }
    }
    rec(n, n, &mut cur, &mut out);
    out
}

/// All strict `ν ⊆ λ` with `|ν| = size`, lexicographically descending.
pub fn strict_partitions_inside(lambda: &StrictPartition, size: u32) -> Vec<StrictPartition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(
        lambda: &StrictPartition,
        rest: u32,
        cur: &mut Vec<u32>,
        out: &mut Vec<StrictPartition>,
    ) {
        if rest == 0 {
            out.push(StrictPartition { parts: cur.clone() });
            return;
        }
        let i = cur.len() + 1;
        let mut max = lambda.part(i).min(rest);
        if let Some(&prev) = cur.last() {
            max = max.min(prev - 1);
        }
        for p in (1..=max).rev() {
            cur.push(p);
            rec(lambda, rest - p, cur, out);
            cur.pop();
        }
    }
    if size <= lambda.size() {
        rec(lambda, size, &mut cur, &mut out);
    }
    out
}

/// A box `(row, col)` in matrix convention.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub row: i32,
    pub col: i32,
}

impl Cell {
    pub const fn new(row: i32, col: i32) -> Self {
        Self { row, col }
    }

    pub const fn up(self) -> Self {
        Self::new(self.row - 1, self.col)
    }

    pub const fn down(self) -> Self {
        Self::new(self.row + 1, self.col)
    }

    pub const fn left(self) -> Self {
        Self::new(self.row, self.col - 1)
    }

    pub const fn right(self) -> Self {
        Self::new(self.row, self.col + 1)
    }

    pub const fn up_left(self) -> Self {
        Self::new(self.row - 1, self.col - 1)
    }

    pub const fn down_right(self) -> Self {
        Self::new(self.row + 1, self.col + 1)
    }

    fn edge_neighbors(self) -> [Cell; 4] {
        [self.up(), self.down(), self.left(), self.right()]
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// A finite set of boxes. Iteration is row-major (top row first, left to right).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct CellSet {
    cells: BTreeSet<Cell>,
}

impl CellSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn contains(&self, c: Cell) -> bool {
        self.cells.contains(&c)
    }

    pub fn insert(&mut self, c: Cell) -> bool {
        self.cells.insert(c)
    }

    pub fn remove(&mut self, c: Cell) -> bool {
        self.cells.remove(&c)
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = Cell> + '_ {
        self.cells.iter().copied()
    }

    pub fn union(&self, other: &CellSet) -> CellSet {
        self.cells.union(&other.cells).copied().collect()
    }

    pub fn difference(&self, other: &CellSet) -> CellSet {
        self.cells.difference(&other.cells).copied().collect()
    }

    pub fn is_subset(&self, other: &CellSet) -> bool {
        self.cells.is_subset(&other.cells)
    }

    pub fn min_row(&self) -> Option<i32> {
        self.cells.first().map(|c| c.row)
    }

    pub fn max_row(&self) -> Option<i32> {
        self.cells.last().map(|c| c.row)
    }

    pub fn min_col(&self) -> Option<i32> {
        self.cells.iter().map(|c| c.col).min()
    }

    pub fn max_col(&self) -> Option<i32> {
        self.cells.iter().map(|c| c.col).max()
    }

    pub fn row(&self, r: i32) -> impl Iterator<Item = Cell> + '_ {
        self.cells
            .range(Cell::new(r, i32::MIN)..=Cell::new(r, i32::MAX))
            .copied()
    }

    pub fn column(&self, c: i32) -> impl Iterator<Item = Cell> + '_ {
        self.cells.iter().copied().filter(move |x| x.col == c)
    }

    /// Reading order: rows bottom to top, each row left to right.
    pub fn reading_order(&self) -> Vec<Cell> {
        let mut v: Vec<Cell> = self.cells.iter().copied().collect();
        v.sort_by(|a, b| b.row.cmp(&a.row).then(a.col.cmp(&b.col)));
        v
    }

    pub fn translate(&self, drow: i32, dcol: i32) -> CellSet {
        self.iter()
            .map(|c| Cell::new(c.row + drow, c.col + dcol))
            .collect()
    }

    /// Edge-connected components, leftmost component first.
    pub fn components(&self) -> Vec<CellSet> {
        let mut seen = BTreeSet::new();
        let mut comps = Vec::new();
        for start in self.iter() {
            if seen.contains(&start) {
                continue;
            }
            let mut comp = CellSet::new();
            let mut queue = VecDeque::from([start]);
            seen.insert(start);
            while let Some(c) = queue.pop_front() {
                comp.insert(c);
                for nb in c.edge_neighbors() {
                    if self.contains(nb) && seen.insert(nb) {
                        queue.push_back(nb);
                    }
                }
            }
            comps.push(comp);
        }
        comps.sort_by_key(|c| (c.min_col(), c.max_row().map(|r| -r)));
        debug_assert!(comps.windows(2).all(|w| w[0].min_col() != w[1].min_col()));
        comps
    }

    pub fn component_count(&self) -> usize {
        self.components().len()
    }

    /// Boxes `(x,y)` with `(x+1,y)` and `(x,y+1)` outside the set.
    pub fn corners(&self) -> CellSet {
        self.iter()
            .filter(|&c| !self.contains(c.down()) && !self.contains(c.right()))
            .collect()
    }

    /// Every row and every column is a contiguous run of boxes.
    pub fn is_convex_by_lines(&self) -> bool {
        let mut rows: std::collections::BTreeMap<i32, Vec<i32>> = Default::default();
        let mut cols: std::collections::BTreeMap<i32, Vec<i32>> = Default::default();
        for c in self.iter() {
            rows.entry(c.row).or_default().push(c.col);
            cols.entry(c.col).or_default().push(c.row);
        }
        let contiguous = |v: &mut Vec<i32>| {
            v.sort_unstable();
            v.windows(2).all(|w| w[1] == w[0] + 1)
        };
        rows.values_mut().all(contiguous) && cols.values_mut().all(contiguous)
    }
}

impl FromIterator<Cell> for CellSet {
    fn from_iter<I: IntoIterator<Item = Cell>>(iter: I) -> Self {
        Self {
            cells: iter.into_iter().collect(),
        }
    }
}

impl<'a> IntoIterator for &'a CellSet {
    type Item = &'a Cell;
    type IntoIter = std::collections::btree_set::Iter<'a, Cell>;

    fn into_iter(self) -> Self::IntoIter {
        self.cells.iter()
    }
}

impl fmt::Display for CellSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, c) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("}")
    }
}

/// `D_λ = {(i,j) : 1 ≤ i ≤ ℓ(λ), i ≤ j ≤ i + λ_i - 1}`.
pub fn shifted_cells(lambda: &StrictPartition) -> CellSet {
    let mut out = CellSet::new();
    for (idx, &p) in lambda.parts().iter().enumerate() {
        let i = idx as i32 + 1;
        for j in i..i + p as i32 {
            out.insert(Cell::new(i, j));
        }
    }
    out
}

/// The box `(x,y)` with `(x-1,y)` and `(x,y+1)` outside the set.
pub fn first_box(cells: &CellSet) -> Option<Cell> {
    cells
        .iter()
        .find(|&c| !cells.contains(c.up()) && !cells.contains(c.right()))
}

/// The box `(u,v)` with `(u+1,v)` and `(u,v-1)` outside the set.
pub fn last_box(cells: &CellSet) -> Option<Cell> {
    cells
        .iter()
        .rev()
        .find(|&c| !cells.contains(c.down()) && !cells.contains(c.left()))
}

/// A connected set of boxes containing no pair `(x-1,y-1), (x,y)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BorderStrip {
    cells: CellSet,
    first: Cell,
    last: Cell,
}

impl BorderStrip {
    pub fn new(cells: CellSet) -> Result<Self> {
        if cells.is_empty() {
            return Err(Error::EmptyShape);
        }
        if cells.component_count() != 1 {
            return Err(Error::NotRealizable(format!("{cells} is disconnected")));
        }
        if let Some(c) = cells.iter().find(|&c| cells.contains(c.up_left())) {
            return Err(Error::NotRealizable(format!(
                "{cells} contains the diagonal pair ending at {c}"
            )));
        }
        let first = first_box(&cells).expect("a border strip has a first box");
        let last = last_box(&cells).expect("a border strip has a last box");
        Ok(Self { cells, first, last })
    }

    pub fn cells(&self) -> &CellSet {
        &self.cells
    }

    pub fn first(&self) -> Cell {
        self.first
    }

    pub fn last(&self) -> Cell {
        self.last
    }
}

/// Splits a broken border strip into its component strips, leftmost first.
pub fn broken_border_strip(cells: &CellSet) -> Result<Vec<BorderStrip>> {
    cells
        .components()
        .into_iter()
        .map(BorderStrip::new)
        .collect()
}

/// A pair `λ/μ`; the pair need not satisfy containment, in which case the
/// shape is invalid and its Q-function is zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: StrictPartition,
    inner: StrictPartition,
}

impl SkewShape {
    pub fn new(outer: StrictPartition, inner: StrictPartition) -> Self {
        Self { outer, inner }
    }

    pub fn straight(outer: StrictPartition) -> Self {
        Self::new(outer, StrictPartition::empty())
    }

    pub fn empty() -> Self {
        Self::new(StrictPartition::empty(), StrictPartition::empty())
    }

    pub fn outer(&self) -> &StrictPartition {
        &self.outer
    }

    pub fn inner(&self) -> &StrictPartition {
        &self.inner
    }

    pub fn is_valid(&self) -> bool {
        self.outer.contains(&self.inner)
    }

    /// Number of boxes, `|λ| - |μ|`, for a valid shape.
    pub fn size(&self) -> Option<u32> {
        self.is_valid()
            .then(|| self.outer.size() - self.inner.size())
    }

    pub fn cells(&self) -> Result<CellSet> {
        skew_cells(self)
    }

    /// No empty rows or columns.
    pub fn is_basic(&self) -> bool {
        if !self.is_valid() {
            return false;
        }
        let (l, m) = (&self.outer, &self.inner);
        (1..=m.len()).all(|i| {
            l.len() > m.len()
                && l.part(i) > m.part(i)
                && l.part(i + 1) as i64 >= m.part(i) as i64 - 1
        })
    }

    /// Removes empty columns (left to right) and empty rows (top to
    /// bottom) until none remain. The result has the same Q-function.
    pub fn normalize_basic(&self) -> Result<SkewShape> {
        let cells = self.cells()?;
        let shape = SkewShape::from_cells(&normalize_cells(&cells))?;
        assert!(
            shape.is_basic(),
            "normalization of {self} stopped at non-basic {shape}"
        );
        Ok(shape)
    }

    /// Reads a cell set back as `D_{α/β}`. Empty rows are given parts
    /// `α_i = β_i` chosen to keep both sequences strict.
    pub fn from_cells(cells: &CellSet) -> Result<SkewShape> {
        if cells.is_empty() {
            return Ok(SkewShape::empty());
        }
        let bad = || Error::NotRealizable(cells.to_string());
        if cells.iter().any(|c| c.row < 1 || c.col < c.row) {
            return Err(bad());
        }
        let rows = cells.max_row().unwrap() as usize;
        // (alpha, beta) per row; None for an empty row
        let mut spans: Vec<Option<(i64, i64)>> = vec![None; rows + 1];
        for r in 1..=rows {
            let cols: Vec<i32> = cells.row(r as i32).map(|c| c.col).collect();
            if cols.is_empty() {
                continue;
            }
            let (lo, hi) = (cols[0], *cols.last().unwrap());
            if (hi - lo + 1) as usize != cols.len() {
                return Err(bad());
            }
            let r = r as i64;
            spans[r as usize] = Some((hi as i64 - r + 1, lo as i64 - r));
        }
        let mut r = 1;
        while r <= rows {
            if spans[r].is_some() {
                r += 1;
                continue;
            }
            let start = r;
            while spans[r].is_none() {
                r += 1;
            }
            let count = (r - start) as i64;
            let (na, nb) = spans[r].unwrap();
            let lower = na.max(nb);
            let upper = if start > 1 {
                let (pa, pb) = spans[start - 1].unwrap();
                pa.min(pb)
            } else {
                lower + count + 1
            };
            if upper - lower - 1 < count {
                return Err(bad());
            }
            for (k, row) in (start..r).enumerate() {
                let t = upper - 1 - k as i64;
                spans[row] = Some((t, t));
            }
        }
        let alpha: Vec<u32> = spans[1..].iter().map(|s| s.unwrap().0 as u32).collect();
        let beta: Vec<u32> = spans[1..]
            .iter()
            .map(|s| s.unwrap().1 as u32)
            .take_while(|&b| b > 0)
            .collect();
        let outer = StrictPartition::new(alpha).map_err(|_| bad())?;
        let inner = StrictPartition::new(beta).map_err(|_| bad())?;
        let shape = SkewShape::new(outer, inner);
        if !shape.is_valid() || shape.cells()? != *cells {
            return Err(bad());
        }
        Ok(shape)
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

impl FromStr for SkewShape {
    type Err = Error;

    /// `6,5,2,1/4,3`, or a bare partition for a straight shape.
    fn from_str(s: &str) -> Result<Self> {
        match s.split_once('/') {
            Some((l, m)) => {
                if m.contains('/') {
                    return Err(Error::parse(s, "more than one '/'"));
                }
                Ok(SkewShape::new(l.parse()?, m.parse()?))
            }
            None => Ok(SkewShape::straight(s.parse()?)),
        }
    }
}

/// `D_{λ/μ} = D_λ \ D_μ`.
pub fn skew_cells(shape: &SkewShape) -> Result<CellSet> {
    if !shape.is_valid() {
        return Err(Error::InvalidShape {
            outer: shape.outer.to_string(),
            inner: shape.inner.to_string(),
        });
    }
    Ok(shifted_cells(&shape.outer).difference(&shifted_cells(&shape.inner)))
}

/// Removes column `y` if it is empty (no box, but boxes further right) and
/// the shifted result is again a skew diagram.
pub fn remove_empty_column(cells: &CellSet, y: i32) -> Option<CellSet> {
    if cells.iter().any(|c| c.col == y) || !cells.iter().any(|c| c.col > y) {
        return None;
    }
    let next: CellSet = cells
        .iter()
        .map(|c| if c.col > y { c.left() } else { c })
        .collect();
    SkewShape::from_cells(&next).ok().map(|_| next)
}

/// Removes row `x` if it is empty (no box, but boxes further down): boxes
/// below move up one, then everything moves left one.
pub fn remove_empty_row(cells: &CellSet, x: i32) -> Option<CellSet> {
    if cells.row(x).next().is_some() || !cells.iter().any(|c| c.row > x) {
        return None;
    }
    let next: CellSet = cells
        .iter()
        .map(|c| if c.row > x { c.up() } else { c })
        .map(Cell::left)
        .collect();
    SkewShape::from_cells(&next).ok().map(|_| next)
}

pub(crate) fn normalize_cells(cells: &CellSet) -> CellSet {
    let mut cur = cells.clone();
    'outer: loop {
        let max_col = cur.max_col().unwrap_or(0);
        for y in 1..max_col {
            if let Some(next) = remove_empty_column(&cur, y) {
                cur = next;
                continue 'outer;
            }
        }
        let max_row = cur.max_row().unwrap_or(0);
        for x in 1..max_row {
            if let Some(next) = remove_empty_row(&cur, x) {
                cur = next;
                continue 'outer;
            }
        }
        return cur;
    }
}

/// `B_λ = {(x,y) ∈ D_λ : (x+1,y+1) ∉ D_λ}`.
pub fn border(lambda: &StrictPartition) -> CellSet {
    let d = shifted_cells(lambda);
    d.iter().filter(|&c| !d.contains(c.down_right())).collect()
}

/// All shapes `λ/ν` with `n` boxes lying inside the border of `λ`.
pub fn border_substrips(lambda: &StrictPartition, n: u32) -> Vec<SkewShape> {
    if n == 0 || n > lambda.size() {
        return Vec::new();
    }
    let b = border(lambda);
    strict_partitions_inside(lambda, lambda.size() - n)
        .into_iter()
        .map(|nu| SkewShape::new(lambda.clone(), nu))
        .filter(|s| s.cells().map(|c| c.is_subset(&b)).unwrap_or(false))
        .collect()
}

/// Partitions whose diagram is `D_λ` minus one corner. Removals that do
/// not leave a strict partition are dropped.
pub fn corner_removals(lambda: &StrictPartition) -> Vec<StrictPartition> {
    let d = shifted_cells(lambda);
    let mut out = Vec::new();
    for corner in d.corners().iter() {
        let mut rest = d.clone();
        rest.remove(corner);
        match SkewShape::from_cells(&rest) {
            Ok(s) if s.inner().is_empty() => out.push(s.outer().clone()),
            _ => log::debug!("removing corner {corner} from {lambda} leaves no strict partition"),
        }
    }
    out.sort_by(|a, b| b.cmp(a));
    out
}

/// `λ ∖ μ`: the parts of `λ` with the parts of `μ` removed.
pub fn partition_difference(
    lambda: &StrictPartition,
    mu: &StrictPartition,
) -> Result<StrictPartition> {
    let mut parts = lambda.parts().to_vec();
    for &p in mu.parts() {
        match parts.iter().position(|&q| q == p) {
            Some(i) => {
                parts.remove(i);
            }
            None => {
                return Err(Error::NotSubset {
                    whole: lambda.to_string(),
                    sub: mu.to_string(),
                })
            }
        }
    }
    StrictPartition::new(parts)
}

/// Reflection along the anti-diagonal, translated so the top occupied row
/// is row 1 and the lowest box of the leftmost column sits on the main
/// diagonal.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OtTransform {
    row_base: i32,
    col_base: i32,
}

impl OtTransform {
    pub fn for_cells(cells: &CellSet) -> Option<Self> {
        let bottom = cells.max_row()?;
        let max_col = cells.max_col()?;
        let bottom_left = cells.row(bottom).next()?.col;
        Some(Self {
            row_base: max_col + 1,
            col_base: max_col - bottom_left + 1 + bottom,
        })
    }

    pub fn apply(&self, c: Cell) -> Cell {
        Cell::new(self.row_base - c.col, self.col_base - c.row)
    }
}

pub fn orthogonal_transpose_cells(cells: &CellSet) -> CellSet {
    match OtTransform::for_cells(cells) {
        Some(t) => cells.iter().map(|c| t.apply(c)).collect(),
        None => CellSet::new(),
    }
}

pub fn orthogonal_transpose(cells: &CellSet) -> Result<SkewShape> {
    SkewShape::from_cells(&orthogonal_transpose_cells(cells))
}
