//! Letters of the marked alphabet, tableaux on skew shifted shapes, content,
//! reading words, the scanning statistics `m_i(j)`, and exhaustive
//! enumeration of tableaux.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::shapes::{Cell, CellSet, SkewShape};

/// A letter of `1' < 1 < 2' < 2 < ...`, stored as `2v - 1` for `v'` and
/// `2v` for `v`, so that the derived order is the alphabet order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[repr(transparent)]
pub struct Letter(u8);

impl Letter {
    pub const MAX_VALUE: u32 = 127;

    pub fn new(value: u32, marked: bool) -> Self {
        assert!(
            (1..=Self::MAX_VALUE).contains(&value),
            "letter value {value} out of range"
        );
        Letter((2 * value - u32::from(marked)) as u8)
    }

    pub fn unmarked(value: u32) -> Self {
        Self::new(value, false)
    }

    pub fn marked(value: u32) -> Self {
        Self::new(value, true)
    }

    pub(crate) const fn from_code(code: u8) -> Self {
        Letter(code)
    }

    pub const fn code(self) -> u8 {
        self.0
    }

    /// `|x|`.
    pub const fn value(self) -> u32 {
        (self.0 as u32).div_ceil(2)
    }

    pub const fn is_marked(self) -> bool {
        self.0 % 2 == 1
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_marked() {
            write!(f, "{}'", self.value())
        } else {
            write!(f, "{}", self.value())
        }
    }
}

impl FromStr for Letter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (digits, marked) = match s.strip_suffix('\'').or_else(|| s.strip_suffix('′')) {
            Some(d) => (d, true),
            None => (s, false),
        };
        let v: u32 = digits
            .parse()
            .map_err(|_| Error::parse(s, "expected a letter such as 3 or 3'"))?;
        if v == 0 || v > Letter::MAX_VALUE {
            return Err(Error::parse(s, "letter value out of range"));
        }
        Ok(Letter::new(v, marked))
    }
}

pub(crate) const NONE: usize = usize::MAX;

/// A cell set in reading order together with neighbor tables. Neighbors in
/// a row or column are the nearest boxes of the same line, which for skew
/// shifted shapes are the adjacent boxes.
#[derive(Debug, PartialEq, Eq, Hash)]
pub struct ShapeIndex {
    set: CellSet,
    cells: Vec<Cell>,
    pub(crate) left: Vec<usize>,
    pub(crate) right: Vec<usize>,
    pub(crate) above: Vec<usize>,
    pub(crate) below: Vec<usize>,
    pub(crate) up_left: Vec<usize>,
    pub(crate) down_right: Vec<usize>,
}

impl ShapeIndex {
    pub fn new(set: &CellSet) -> Self {
        let cells = set.reading_order();
        let n = cells.len();
        let pos: BTreeMap<Cell, usize> = cells.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let mut idx = Self {
            set: set.clone(),
            cells,
            left: vec![NONE; n],
            right: vec![NONE; n],
            above: vec![NONE; n],
            below: vec![NONE; n],
            up_left: vec![NONE; n],
            down_right: vec![NONE; n],
        };
        let mut by_row: BTreeMap<i32, Vec<usize>> = BTreeMap::new();
        let mut by_col: BTreeMap<i32, Vec<usize>> = BTreeMap::new();
        for (i, c) in idx.cells.iter().enumerate() {
            by_row.entry(c.row).or_default().push(i);
            by_col.entry(c.col).or_default().push(i);
        }
        for line in by_row.values_mut() {
            line.sort_by_key(|&i| idx.cells[i].col);
            for w in line.windows(2) {
                idx.right[w[0]] = w[1];
                idx.left[w[1]] = w[0];
            }
        }
        for line in by_col.values_mut() {
            line.sort_by_key(|&i| idx.cells[i].row);
            for w in line.windows(2) {
                idx.below[w[0]] = w[1];
                idx.above[w[1]] = w[0];
            }
        }
        for (i, &c) in idx.cells.iter().enumerate() {
            if let Some(&j) = pos.get(&c.down_right()) {
                idx.down_right[i] = j;
                idx.up_left[j] = i;
            }
        }
        idx
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Boxes in reading order.
    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn cell_set(&self) -> &CellSet {
        &self.set
    }

    pub fn index_of(&self, c: Cell) -> Option<usize> {
        // reading order: rows descending, columns ascending
        self.cells
            .binary_search_by(|x| c.row.cmp(&x.row).then(x.col.cmp(&c.col)))
            .ok()
    }

    /// Admissible letter codes `lo..=hi` for box `i`, given codes for the
    /// boxes before it in reading order.
    #[inline]
    pub(crate) fn reading_bounds(&self, i: usize, codes: &[Letter], max_code: u8) -> (u8, u8) {
        let mut lo = 1;
        let mut hi = max_code;
        let l = self.left[i];
        if l != NONE {
            let c = codes[l].0;
            lo = if c % 2 == 1 { c + 1 } else { c };
        }
        let b = self.below[i];
        if b != NONE {
            let c = codes[b].0;
            hi = hi.min(if c.is_multiple_of(2) { c - 1 } else { c });
        }
        let d = self.down_right[i];
        if d != NONE {
            let v = codes[d].value() as u8;
            hi = hi.min(2 * (v - 1));
        }
        (lo, hi)
    }

    /// Admissible codes for box `i`, given codes for the boxes after it in
    /// reading order.
    #[inline]
    pub(crate) fn reverse_bounds(&self, i: usize, codes: &[Letter], max_code: u8) -> (u8, u8) {
        let mut lo = 1;
        let mut hi = max_code;
        let r = self.right[i];
        if r != NONE {
            let c = codes[r].0;
            hi = hi.min(if c % 2 == 1 { c - 1 } else { c });
        }
        let a = self.above[i];
        if a != NONE {
            let c = codes[a].0;
            lo = lo.max(if c.is_multiple_of(2) { c + 1 } else { c });
        }
        let u = self.up_left[i];
        if u != NONE {
            let v = codes[u].value() as u8;
            lo = lo.max(2 * v + 1);
        }
        (lo, hi)
    }
}

/// A filling of a cell set with letters, stored in reading order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tableau {
    shape: Arc<ShapeIndex>,
    letters: Vec<Letter>,
}

impl Tableau {
    pub fn new(cells: &CellSet, entries: &BTreeMap<Cell, Letter>) -> Result<Self> {
        if entries.len() != cells.len() || entries.keys().any(|&c| !cells.contains(c)) {
            return Err(Error::InvalidTableau(
                "entries do not match the shape".into(),
            ));
        }
        let shape = Arc::new(ShapeIndex::new(cells));
        let letters = shape.cells().iter().map(|c| entries[c]).collect();
        Self::from_letters(shape, letters)
    }

    pub fn from_letters(shape: Arc<ShapeIndex>, letters: Vec<Letter>) -> Result<Self> {
        if letters.len() != shape.len() {
            return Err(Error::InvalidTableau(format!(
                "{} letters for {} boxes",
                letters.len(),
                shape.len()
            )));
        }
        let t = Self { shape, letters };
        t.check()?;
        Ok(t)
    }

    pub(crate) fn from_letters_unchecked(shape: Arc<ShapeIndex>, letters: Vec<Letter>) -> Self {
        debug_assert!(Self {
            shape: shape.clone(),
            letters: letters.clone()
        }
        .check()
        .is_ok());
        Self { shape, letters }
    }

    pub fn empty() -> Self {
        Self {
            shape: Arc::new(ShapeIndex::new(&CellSet::new())),
            letters: Vec::new(),
        }
    }

    fn check(&self) -> Result<()> {
        let s = &self.shape;
        for i in 0..s.len() {
            let x = self.letters[i];
            let c = s.cells()[i];
            let r = s.right[i];
            if r != NONE {
                let y = self.letters[r];
                if x > y || (x == y && x.is_marked()) {
                    return Err(Error::InvalidTableau(format!(
                        "row condition fails between {c} and {}",
                        s.cells()[r]
                    )));
                }
            }
            let b = s.below[i];
            if b != NONE {
                let y = self.letters[b];
                if x > y || (x == y && !x.is_marked()) {
                    return Err(Error::InvalidTableau(format!(
                        "column condition fails between {c} and {}",
                        s.cells()[b]
                    )));
                }
            }
            let d = s.down_right[i];
            if d != NONE && x.value() >= self.letters[d].value() {
                return Err(Error::InvalidTableau(format!(
                    "diagonal does not grow at {c}"
                )));
            }
        }
        Ok(())
    }

    pub fn shape(&self) -> &Arc<ShapeIndex> {
        &self.shape
    }

    pub fn cells(&self) -> &CellSet {
        self.shape.cell_set()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Letters in reading order; this is the reading word.
    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn get(&self, c: Cell) -> Option<Letter> {
        self.shape.index_of(c).map(|i| self.letters[i])
    }

    /// `(box, letter)` pairs in reading order.
    pub fn iter(&self) -> impl Iterator<Item = (Cell, Letter)> + '_ {
        self.shape
            .cells()
            .iter()
            .copied()
            .zip(self.letters.iter().copied())
    }

    pub fn entries(&self) -> BTreeMap<Cell, Letter> {
        self.iter().collect()
    }

    /// Replaces the letter in box `c` and re-validates.
    pub fn with(&self, c: Cell, letter: Letter) -> Result<Tableau> {
        let i = self
            .shape
            .index_of(c)
            .ok_or_else(|| Error::InvalidTableau(format!("{c} is not a box of the shape")))?;
        let mut letters = self.letters.clone();
        letters[i] = letter;
        Self::from_letters(self.shape.clone(), letters)
    }

    pub fn max_value(&self) -> u32 {
        self.letters.iter().map(|l| l.value()).max().unwrap_or(0)
    }

    pub fn content(&self) -> Content {
        content_of(&self.letters)
    }

    pub fn reading_word(&self) -> Word {
        Word {
            letters: self.letters.clone(),
            boxes: self.shape.cells().to_vec(),
        }
    }

    /// `T^(i)`: the boxes holding `i` or `i'`.
    pub fn band(&self, i: u32) -> CellSet {
        self.iter()
            .filter(|(_, l)| l.value() == i)
            .map(|(c, _)| c)
            .collect()
    }
}

impl fmt::Display for Tableau {
    /// One line per row from row 1 down; `.` marks a position without a
    /// box, and a row without boxes is a single `.`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(max_row) = self.cells().max_row() else {
            return Ok(());
        };
        for r in 1..=max_row {
            if r > 1 {
                f.write_str("\n")?;
            }
            let row: Vec<Cell> = self.cells().row(r).collect();
            let Some(last) = row.last() else {
                f.write_str(".")?;
                continue;
            };
            for col in 1..=last.col {
                if col > 1 {
                    f.write_str(" ")?;
                }
                match self.get(Cell::new(r, col)) {
                    Some(l) => write!(f, "{l}")?,
                    None => f.write_str(".")?,
                }
            }
        }
        Ok(())
    }
}

impl FromStr for Tableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut entries = BTreeMap::new();
        for (r, line) in s.lines().enumerate() {
            for (c, tok) in line.split_whitespace().enumerate() {
                if tok == "." {
                    continue;
                }
                entries.insert(
                    Cell::new(r as i32 + 1, c as i32 + 1),
                    tok.parse::<Letter>()?,
                );
            }
        }
        let cells: CellSet = entries.keys().copied().collect();
        SkewShape::from_cells(&cells)?;
        Tableau::new(&cells, &entries)
    }
}

/// `c^(u)`, `c^(m)` and `c = c^(u) + c^(m)`, each trimmed after the
/// largest value present.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Content {
    pub unmarked: Vec<u32>,
    pub marked: Vec<u32>,
    pub total: Vec<u32>,
}

impl Content {
    /// Count of letters with value `i` (1-indexed), zero when absent.
    pub fn total_of(&self, i: u32) -> u32 {
        get1(&self.total, i)
    }

    pub fn unmarked_of(&self, i: u32) -> u32 {
        get1(&self.unmarked, i)
    }

    pub fn marked_of(&self, i: u32) -> u32 {
        get1(&self.marked, i)
    }

    /// The total content read as a strict partition, if it is one.
    pub fn as_strict_partition(&self) -> Option<crate::shapes::StrictPartition> {
        crate::shapes::StrictPartition::new(self.total.clone()).ok()
    }
}

fn get1(v: &[u32], i: u32) -> u32 {
    if i == 0 {
        return 0;
    }
    v.get(i as usize - 1).copied().unwrap_or(0)
}

pub(crate) fn content_of(letters: &[Letter]) -> Content {
    let max = letters.iter().map(|l| l.value()).max().unwrap_or(0) as usize;
    let mut c = Content {
        unmarked: vec![0; max],
        marked: vec![0; max],
        total: vec![0; max],
    };
    for l in letters {
        let i = l.value() as usize - 1;
        if l.is_marked() {
            c.marked[i] += 1;
        } else {
            c.unmarked[i] += 1;
        }
        c.total[i] += 1;
    }
    c
}

/// A reading word with the box each letter was read from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Word {
    pub letters: Vec<Letter>,
    pub boxes: Vec<Cell>,
}

impl Word {
    /// A word without box positions.
    pub fn from_letters(letters: Vec<Letter>) -> Self {
        Self {
            letters,
            boxes: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let letters = s
            .split_whitespace()
            .map(str::parse)
            .collect::<Result<Vec<Letter>>>()?;
        Ok(Word::from_letters(letters))
    }
}

/// `m_i(j)` for `0 ≤ j ≤ 2n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MStats {
    pub i: u32,
    pub values: Vec<u32>,
}

impl MStats {
    pub fn m(&self, j: usize) -> u32 {
        self.values[j]
    }
}

/// Scans right to left counting `i`, then left to right adding `i'`.
pub fn m_stats(w: &Word, i: u32) -> MStats {
    let n = w.len();
    let mut values = Vec::with_capacity(2 * n + 1);
    let mut m = 0;
    values.push(0);
    for l in w.letters.iter().rev() {
        if l.value() == i && !l.is_marked() {
            m += 1;
        }
        values.push(m);
    }
    for l in &w.letters {
        if l.value() == i && l.is_marked() {
            m += 1;
        }
        values.push(m);
    }
    MStats { i, values }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum IterState {
    Fresh,
    Running,
    Done,
}

/// Restartable backtracking over tableaux, boxes filled in reading order
/// and letters tried in increasing order.
#[derive(Clone, Debug)]
pub struct TableauIter {
    shape: Arc<ShapeIndex>,
    max_code: u8,
    codes: Vec<Letter>,
    target: Option<Vec<u32>>,
    counts: Vec<u32>,
    state: IterState,
}

impl TableauIter {
    fn new(shape: Arc<ShapeIndex>, max_value: u32, target: Option<Vec<u32>>) -> Self {
        let max_value = max_value.min(Letter::MAX_VALUE);
        let n = shape.len();
        Self {
            shape,
            max_code: (2 * max_value) as u8,
            codes: vec![Letter(0); n],
            counts: vec![0; max_value as usize + 1],
            target,
            state: IterState::Fresh,
        }
    }

    /// Starts over from the first tableau.
    pub fn restart(&mut self) {
        self.codes.iter_mut().for_each(|c| *c = Letter(0));
        self.counts.iter_mut().for_each(|c| *c = 0);
        self.state = IterState::Fresh;
    }

    #[inline]
    fn allowed(&self, code: u8) -> bool {
        match &self.target {
            Some(t) => {
                let v = Letter(code).value() as usize;
                self.counts[v] < t[v - 1]
            }
            None => true,
        }
    }
}

impl Iterator for TableauIter {
    type Item = Tableau;

    fn next(&mut self) -> Option<Tableau> {
        let n = self.shape.len();
        let mut i = match self.state {
            IterState::Done => return None,
            IterState::Fresh if n == 0 => {
                self.state = IterState::Done;
                return Some(Tableau::from_letters_unchecked(
                    self.shape.clone(),
                    Vec::new(),
                ));
            }
            IterState::Fresh => 0,
            IterState::Running => n - 1,
        };
        loop {
            let prev = self.codes[i].0;
            if prev > 0 {
                self.counts[Letter(prev).value() as usize] -= 1;
            }
            let (lo, hi) = self.shape.reading_bounds(i, &self.codes, self.max_code);
            let mut c = lo.max(prev + 1);
            while c <= hi && !self.allowed(c) {
                c += 1;
            }
            if c <= hi {
                self.codes[i] = Letter(c);
                self.counts[Letter(c).value() as usize] += 1;
                if i + 1 == n {
                    self.state = IterState::Running;
                    return Some(Tableau::from_letters_unchecked(
                        self.shape.clone(),
                        self.codes.clone(),
                    ));
                }
                i += 1;
                self.codes[i] = Letter(0);
            } else {
                self.codes[i] = Letter(0);
                if i == 0 {
                    self.state = IterState::Done;
                    return None;
                }
                i -= 1;
            }
        }
    }
}

/// All tableaux on `shape` with letter values at most `max_value`.
pub fn enumerate_tableaux(shape: &CellSet, max_value: u32) -> TableauIter {
    TableauIter::new(Arc::new(ShapeIndex::new(shape)), max_value, None)
}

/// All tableaux on `shape` whose total content is `target`.
pub fn enumerate_tableaux_with_content(shape: &CellSet, target: &[u32]) -> TableauIter {
    let index = Arc::new(ShapeIndex::new(shape));
    let mut it = TableauIter::new(index, target.len() as u32, Some(target.to_vec()));
    let sum: u64 = target.iter().map(|&x| x as u64).sum();
    if sum != shape.len() as u64 || target.len() > Letter::MAX_VALUE as usize {
        it.state = IterState::Done;
    }
    it
}

/// Calls `f` on the letters (in reading order) of every tableau on `shape`
/// with values at most `max_value`, without allocating per tableau.
pub fn for_each_tableau(shape: &ShapeIndex, max_value: u32, mut f: impl FnMut(&[Letter])) {
    fn rec(
        shape: &ShapeIndex,
        i: usize,
        max_code: u8,
        codes: &mut [Letter],
        f: &mut dyn FnMut(&[Letter]),
    ) {
        if i == codes.len() {
            f(codes);
            return;
        }
        let (lo, hi) = shape.reading_bounds(i, codes, max_code);
        for c in lo..=hi {
            codes[i] = Letter(c);
            rec(shape, i + 1, max_code, codes, f);
        }
    }
    let mut codes = vec![Letter(0); shape.len()];
    let max_code = (2 * max_value.min(Letter::MAX_VALUE)) as u8;
    rec(shape, 0, max_code, &mut codes, &mut f);
}
