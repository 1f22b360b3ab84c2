//! k-amenability of words and tableaux: the scanning definition, the
//! box-local checklist criterion, a sufficient criterion, and fitting bands.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::Result;
use crate::shapes::{broken_border_strip, BorderStrip, Cell};
use crate::tableaux::{Letter, ShapeIndex, Tableau, Word, NONE};

/// Scanning definition, conditions (a) to (d).
pub fn is_k_amenable_word(w: &Word, k: u32) -> bool {
    k_amenable_letters(&w.letters, k)
}

/// `is_k_amenable_word` on a bare reading word.
pub fn k_amenable_letters(w: &[Letter], k: u32) -> bool {
    assert!(k > 1, "k-amenability needs k > 1");
    if k > Letter::MAX_VALUE {
        return true;
    }
    let (k1u, k1m) = (Letter::unmarked(k - 1), Letter::marked(k - 1));
    let (ku, km) = (Letter::unmarked(k), Letter::marked(k));
    let (mut mk, mut mk1) = (0u32, 0u32);
    for &l in w.iter().rev() {
        if mk == mk1 && (l == ku || l == km) {
            return false;
        }
        if l == ku {
            mk += 1;
        } else if l == k1u {
            mk1 += 1;
        }
    }
    for &l in w {
        if mk == mk1 && (l == k1u || l == km) {
            return false;
        }
        if l == km {
            mk += 1;
        } else if l == k1m {
            mk1 += 1;
        }
    }
    let first_in = |a: Letter, b: Letter| w.iter().copied().find(|&l| l == a || l == b);
    first_in(km, ku).is_none_or(|l| l == ku) && first_in(k1m, k1u).is_none_or(|l| l == k1u)
}

/// k-amenable for every `k > 1`. Values past `max + 1` are vacuous.
pub fn is_amenable(t: &Tableau) -> bool {
    amenable_letters(t.letters())
}

pub(crate) fn amenable_letters(w: &[Letter]) -> bool {
    let max = w.iter().map(|l| l.value()).max().unwrap_or(0);
    (2..=max + 1).all(|k| k_amenable_letters(w, k))
}

/// The band `T^(i)` split into its border strips, leftmost first.
#[derive(Clone, Debug)]
pub struct BandView {
    pub i: u32,
    pub strips: Vec<BorderStrip>,
}

impl BandView {
    pub fn new(t: &Tableau, i: u32) -> Result<Self> {
        Ok(Self {
            i,
            strips: broken_border_strip(&t.band(i))?,
        })
    }

    /// First box of the rightmost component.
    pub fn first_box(&self) -> Option<Cell> {
        self.strips.last().map(BorderStrip::first)
    }

    /// Last box of the leftmost component.
    pub fn last_box(&self) -> Option<Cell> {
        self.strips.first().map(BorderStrip::last)
    }
}

/// `T^(i)` is empty or its last box holds unmarked `i`.
pub fn is_fitting(t: &Tableau, i: u32) -> bool {
    if i == 0 || i > Letter::MAX_VALUE {
        return true;
    }
    let band = BandView::new(t, i).expect("bands of a tableau are broken border strips");
    match band.last_box() {
        None => true,
        Some(c) => t.get(c) == Some(Letter::unmarked(i)),
    }
}

/// The last box of the leftmost component is the lowest box of the band's
/// leftmost column.
fn fitting_fast(shape: &ShapeIndex, w: &[Letter], i: u32) -> bool {
    let mut best: Option<(Cell, Letter)> = None;
    for (&c, &l) in shape.cells().iter().zip(w) {
        if l.value() != i {
            continue;
        }
        match best {
            Some((b, _)) if (b.col, -b.row) <= (c.col, -c.row) => {}
            _ => best = Some((c, l)),
        }
    }
    best.is_none_or(|(_, l)| !l.is_marked())
}

/// Kuhn's augmenting-path matching. Returns, for each left vertex, its
/// matched right vertex.
pub fn max_matching(
    left: usize,
    right: usize,
    adj: impl Fn(usize, usize) -> bool,
) -> Vec<Option<usize>> {
    fn augment(
        u: usize,
        right: usize,
        adj: &dyn Fn(usize, usize) -> bool,
        seen: &mut [bool],
        owner: &mut [Option<usize>],
    ) -> bool {
        for v in 0..right {
            if !adj(u, v) || seen[v] {
                continue;
            }
            seen[v] = true;
            if owner[v].is_none_or(|w| augment(w, right, adj, seen, owner)) {
                owner[v] = Some(u);
                return true;
            }
        }
        false
    }
    let mut owner = vec![None; right];
    for u in 0..left {
        let mut seen = vec![false; right];
        augment(u, right, &adj, &mut seen, &mut owner);
    }
    let mut out = vec![None; left];
    for (v, o) in owner.iter().enumerate() {
        if let Some(u) = o {
            out[*u] = Some(v);
        }
    }
    out
}

/// Everything the checklist criterion inspects for one tableau and one `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChecklistContext {
    pub k: u32,
    pub unmarked_prev: u32,
    pub unmarked_k: u32,
    pub total_prev: u32,
    pub total_k: u32,
    /// `(box, |S⊠^(k-1)|, |S⊠^(k)|)` for every box holding `k`.
    pub k_boxes: Vec<(Cell, u32, u32)>,
    /// `B_T^(k)` top row first, with the same counts.
    pub b: Vec<(Cell, u32, u32)>,
    /// `B̂_T^(k-1)`.
    pub b_hat: Vec<Cell>,
    /// Rows holding `k-1` or `k'`.
    pub blocked_rows: BTreeSet<i32>,
    pub d: i64,
    pub fitting_prev: bool,
    pub fitting_k: bool,
}

impl ChecklistContext {
    pub fn new(t: &Tableau, k: u32) -> Self {
        Self::from_letters(t.shape(), t.letters(), k)
    }

    pub(crate) fn from_letters(shape: &ShapeIndex, w: &[Letter], k: u32) -> Self {
        assert!(k > 1, "k-amenability needs k > 1");
        let cells = shape.cells();
        let (k1u, k1m) = (Letter::unmarked(k - 1), Letter::marked(k - 1));
        let (ku, km) = (Letter::unmarked(k), Letter::marked(k));
        let count = |l: Letter| w.iter().filter(|&&x| x == l).count() as u32;
        let (unmarked_prev, unmarked_k) = (count(k1u), count(ku));
        let total_prev = unmarked_prev + count(k1m);
        let total_k = unmarked_k + count(km);
        let s_counts = |i: usize| {
            let c = cells[i];
            let (mut a, mut b) = (0, 0);
            for (j, &x) in cells.iter().enumerate() {
                if x.row <= c.row && x.col >= c.col {
                    if w[j] == k1u {
                        a += 1;
                    } else if w[j] == ku {
                        b += 1;
                    }
                }
            }
            (cells[i], a, b)
        };
        let k_boxes = (0..w.len()).filter(|&i| w[i] == ku).map(s_counts).collect();
        let mut b: Vec<(Cell, u32, u32)> = (0..w.len())
            .filter(|&i| w[i] == km && (shape.up_left[i] == NONE || w[shape.up_left[i]] != k1m))
            .map(s_counts)
            .collect();
        b.sort_by_key(|&(c, _, _)| (c.row, c.col));
        let b_hat = (0..w.len())
            .filter(|&i| {
                w[i] == k1m && (shape.down_right[i] == NONE || w[shape.down_right[i]] != km)
            })
            .map(|i| cells[i])
            .collect();
        let blocked_rows = (0..w.len())
            .filter(|&i| w[i] == k1u || w[i] == km)
            .map(|i| cells[i].row)
            .collect();
        let d = b.len() as i64 + unmarked_k as i64 - unmarked_prev as i64 + 1;
        Self {
            k,
            unmarked_prev,
            unmarked_k,
            total_prev,
            total_k,
            k_boxes,
            b,
            b_hat,
            blocked_rows,
            d,
            fitting_prev: fitting_fast(shape, w, k - 1),
            fitting_k: fitting_fast(shape, w, k),
        }
    }

    /// `c_{k-1} = c_k = 0`.
    pub fn is_trivial(&self) -> bool {
        self.total_prev == 0 && self.total_k == 0
    }

    /// `B_T^(k)(d)`.
    pub fn prefix(&self) -> Vec<Cell> {
        let d = self.d.clamp(0, self.b.len() as i64) as usize;
        self.b[..d].iter().map(|&(c, _, _)| c).collect()
    }

    /// `φ` may send `from` to `to` when no row strictly between them holds
    /// `k-1` or `k'`.
    pub fn compatible(&self, from: Cell, to: Cell) -> bool {
        to.row + 1 >= from.row
            || self
                .blocked_rows
                .range(to.row + 1..from.row)
                .next()
                .is_none()
    }

    /// Conditions (1) to (6), in order.
    pub fn conditions(&self) -> [bool; 6] {
        [
            self.unmarked_prev > self.unmarked_k,
            self.k_boxes.iter().all(|&(_, a, b)| a >= b),
            self.b.iter().all(|&(_, a, b)| a > b),
            self.d <= 0 || find_phi_matching(self).is_some(),
            self.fitting_prev,
            self.total_k == 0 || self.fitting_k,
        ]
    }

    pub fn holds(&self) -> bool {
        self.is_trivial() || self.conditions().iter().all(|&c| c)
    }
}

/// An injective `φ: B_T^(k)(d) → B̂_T^(k-1)` respecting the row gaps, found
/// by maximum matching.
pub fn find_phi_matching(ctx: &ChecklistContext) -> Option<BTreeMap<Cell, Cell>> {
    let from = ctx.prefix();
    let to = &ctx.b_hat;
    let m = max_matching(from.len(), to.len(), |i, j| ctx.compatible(from[i], to[j]));
    m.iter()
        .enumerate()
        .map(|(i, v)| v.map(|j| (from[i], to[j])))
        .collect()
}

/// Box-local criterion for k-amenability.
pub fn is_k_amenable_checklist(t: &Tableau, k: u32) -> bool {
    checklist_letters(t.shape(), t.letters(), k)
}

/// `is_k_amenable_checklist` on letters in reading order; the filling
/// need not be a tableau.
pub fn checklist_letters(shape: &ShapeIndex, w: &[Letter], k: u32) -> bool {
    if k > Letter::MAX_VALUE {
        return true;
    }
    let (k1, kk) = (k - 1, k);
    if !w.iter().any(|l| l.value() == k1 || l.value() == kk) {
        return true;
    }
    ChecklistContext::from_letters(shape, w, k).holds()
}

/// The sufficient criterion; implies k-amenability but not conversely.
pub fn satisfies_sufficient(t: &Tableau, k: u32) -> bool {
    assert!(k > 1, "k-amenability needs k > 1");
    if k > Letter::MAX_VALUE {
        return true;
    }
    let (k1u, k1m) = (Letter::unmarked(k - 1), Letter::marked(k - 1));
    let (ku, km) = (Letter::unmarked(k), Letter::marked(k));
    let c = t.content();
    let (ck1, ck) = (c.total_of(k - 1), c.total_of(k));
    if ck1 == 0 && ck == 0 {
        return true;
    }
    let entries = t.entries();
    let at = |r: i32, col: i32| entries.get(&Cell::new(r, col)).copied();
    let below_free = |x: Cell| {
        entries
            .iter()
            .all(|(&z, &l)| !(z.col == x.col && z.row > x.row && l == ku))
    };
    let c1 = entries.iter().any(|(&x, &l)| l == k1u && below_free(x));
    let c2 = entries.iter().filter(|(_, &l)| l == ku).all(|(&x, _)| {
        entries
            .iter()
            .any(|(&z, &l)| z.col == x.col && z.row < x.row && l == k1u)
    });
    let c3 = entries
        .iter()
        .filter(|(_, &l)| l == km)
        .all(|(&x, _)| at(x.row - 1, x.col - 1) == Some(k1m));
    c1 && c2 && c3 && is_fitting(t, k - 1) && (ck == 0 || is_fitting(t, k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::SkewShape;
    use crate::tableaux::enumerate_tableaux;

    fn word(s: &str) -> Word {
        s.parse().unwrap()
    }

    const CHECKLIST_EXAMPLE: &str = "\
. . . . . . . . 1' 1 1
. . . . . . . 1' 2' 2
. . . . . . . 1
. . . . . . . 2'
. . . . . 1' 1 2
. . . . . 1 2'
. . . . . . 2";

    #[test]
    fn word_examples() {
        assert!(!is_k_amenable_word(&word("2"), 2));
        // content (1,1) is never amenable
        assert!(!is_k_amenable_word(&word("1 2"), 2));
        assert!(is_k_amenable_word(&word("2 1 1"), 2));
        assert!(!is_k_amenable_word(&word("2 1"), 2));
        assert!(is_k_amenable_word(&word(""), 2));
        assert!(!is_k_amenable_word(&word("1'"), 2));
    }

    #[test]
    fn checklist_worked_example() {
        let t: Tableau = CHECKLIST_EXAMPLE.parse().unwrap();
        assert_eq!(
            SkewShape::from_cells(t.cells()).unwrap(),
            "11,9,6,5,4,2,1/8,6,5,4,1".parse().unwrap()
        );
        let ctx = ChecklistContext::new(&t, 2);
        let counts: Vec<(u32, u32)> = ctx.k_boxes.iter().map(|&(_, a, b)| (a, b)).collect();
        assert_eq!(counts, vec![(4, 3), (3, 2), (2, 1)]);
        let b: Vec<Cell> = ctx.b.iter().map(|&(c, _, _)| c).collect();
        assert_eq!(b, vec![Cell::new(2, 9), Cell::new(4, 8)]);
        assert_eq!(ctx.d, 1);
        let phi = find_phi_matching(&ctx).unwrap();
        assert_eq!(phi.len(), 1);
        assert!(ctx.compatible(Cell::new(2, 9), Cell::new(2, 8)));
        assert!(ctx.compatible(Cell::new(2, 9), Cell::new(1, 9)));
        assert!(ctx.holds());
        assert!(is_k_amenable_word(&t.reading_word(), 2));
        assert!(!satisfies_sufficient(&t, 2));
        assert!(is_fitting(&t, 1) && is_fitting(&t, 2));
    }

    #[test]
    fn checklist_matches_word_on_small_shapes() {
        for s in ["3,1", "4,2/1", "5,3,1/3", "4,3,1/2", "5,2/2", "3,2,1/1"] {
            let cells = s.parse::<SkewShape>().unwrap().cells().unwrap();
            for t in enumerate_tableaux(&cells, 4) {
                for k in 2..=5 {
                    assert_eq!(
                        is_k_amenable_checklist(&t, k),
                        is_k_amenable_word(&t.reading_word(), k),
                        "{s} k={k}\n{t}"
                    );
                }
            }
        }
    }

    #[test]
    fn fitting_fast_matches_border_strips() {
        let cells = "5,3,1/2".parse::<SkewShape>().unwrap().cells().unwrap();
        for t in enumerate_tableaux(&cells, 3) {
            for i in 1..=4 {
                assert_eq!(is_fitting(&t, i), fitting_fast(t.shape(), t.letters(), i));
            }
        }
    }

    #[test]
    fn matching_is_maximum() {
        // greedy would match 0-0 and strand vertex 1
        let adj = |u: usize, v: usize| matches!((u, v), (0, 0) | (0, 1) | (1, 0));
        let m = max_matching(2, 2, adj);
        assert!(m.iter().all(Option::is_some));
        let none = max_matching(2, 1, |_, _| true);
        assert_eq!(none.iter().filter(|x| x.is_some()).count(), 1);
    }

    #[test]
    fn lone_marked_cell_is_not_fitting() {
        let t: Tableau = "1'".parse().unwrap();
        assert!(!is_fitting(&t, 1));
        assert!(is_fitting(&t, 2));
        assert!(!is_amenable(&t));
        let t: Tableau = "1".parse().unwrap();
        assert!(is_amenable(&t));
    }
}
