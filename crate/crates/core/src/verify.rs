//! Corpus sweep: every cross-check between the modules, run over all
//! basic shapes up to a size bound.

use std::collections::HashMap;
use std::fmt;
use std::sync::Mutex;

use rayon::prelude::*;

use crate::amenability::{checklist_letters, k_amenable_letters};
use crate::canonical::{canonical_tableau, leading_coefficient, lex_max_content};
use crate::classification::{classify, Verdict};
use crate::corpus::{basic_shapes, outer_partitions};
use crate::expansion::{
    amenable_tableaux, decompose_border_minus_one, decompose_row_strip, decompose_single_box,
    expand, expand_cells, lambda_flip, monomial_oracle_cells, MonomialPolynomial,
};
use crate::shapes::{
    normalize_cells, orthogonal_transpose_cells, strict_partitions, SkewShape, StrictPartition,
};
use crate::tableaux::{Letter, ShapeIndex, NONE};

#[derive(Clone, Debug)]
pub struct SweepOptions {
    pub max_cells: u32,
    /// Largest letter value for the checklist comparison.
    pub max_value: u32,
    pub jobs: usize,
}

#[derive(Clone, Debug, Default)]
pub struct CheckReport {
    pub name: &'static str,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            write!(f, "PASS {} cases={}", self.name, self.cases)
        } else {
            write!(
                f,
                "FAIL {} cases={} failures={} first: {}",
                self.name,
                self.cases,
                self.failures.len(),
                self.failures[0]
            )
        }
    }
}

type Outcome = std::result::Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Straight-shape polynomials in `n` variables, shared across shapes.
#[derive(Default)]
struct QCache(Mutex<HashMap<(StrictPartition, usize), MonomialPolynomial>>);

impl QCache {
    fn get(&self, nu: &StrictPartition, n: usize) -> MonomialPolynomial {
        let key = (nu.clone(), n);
        if let Some(q) = self.0.lock().unwrap().get(&key) {
            return q.clone();
        }
        let q = monomial_oracle_cells(&nu.cells(), n);
        self.0.lock().unwrap().insert(key, q.clone());
        q
    }
}

fn check_oracle(s: &SkewShape, cache: &QCache) -> Outcome {
    let cells = s.cells().map_err(|e| e.to_string())?;
    let n = cells.len();
    let lhs = monomial_oracle_cells(&cells, n);
    let mut rhs = MonomialPolynomial::zero(n);
    for (nu, &c) in expand(s).terms() {
        rhs.add_scaled(&cache.get(nu, n), c);
    }
    ensure(lhs == rhs, || format!("{s}: monomial expansion differs"))
}

fn check_strict_contents(s: &SkewShape) -> Outcome {
    let cells = s.cells().map_err(|e| e.to_string())?;
    for t in amenable_tableaux(&cells, None) {
        let c = t.content().total;
        let strict = c.iter().all(|&x| x > 0) && c.windows(2).all(|w| w[0] > w[1]);
        ensure(strict, || {
            format!("{s}: amenable tableau with content {c:?}\n{t}")
        })?;
    }
    Ok(())
}

/// Stand-in for every letter other than `1', 1, 2', 2`.
const OTHER: Letter = Letter::from_code(6);

/// Calls `f` on every filling of the shape by `1', 1, 2', 2` and `OTHER`
/// that obeys the row, column and diagonal rules between adjacent letters
/// of the first kind. Both k-amenability tests read only the letters `k-1`
/// and `k`, and nothing else depends on `k`, so these patterns at `k = 2`
/// stand for every pair (tableau, k).
pub fn for_each_pattern(index: &ShapeIndex, mut f: impl FnMut(&[Letter])) {
    fn rec(index: &ShapeIndex, i: usize, w: &mut [Letter], f: &mut dyn FnMut(&[Letter])) {
        if i == w.len() {
            f(w);
            return;
        }
        let mut lo = 1;
        let mut hi = 4;
        let known = |j: usize| (j != NONE && w[j] != OTHER).then(|| w[j].code());
        if let Some(c) = known(index.left[i]) {
            lo = if c % 2 == 1 { c + 1 } else { c };
        }
        if let Some(c) = known(index.below[i]) {
            hi = hi.min(if c % 2 == 0 { c - 1 } else { c });
        }
        if let Some(c) = known(index.down_right[i]) {
            hi = hi.min(2 * (c.div_ceil(2) - 1));
        }
        for c in lo..=hi {
            w[i] = Letter::from_code(c);
            rec(index, i + 1, w, f);
        }
        w[i] = OTHER;
        rec(index, i + 1, w, f);
    }
    let mut w = vec![OTHER; index.len()];
    rec(index, 0, &mut w, &mut f);
}

/// A tableau with values at most `max_value` and some `k` whose letters
/// `k-1, k` sit exactly where the pattern has `1, 2`.
pub fn realize_pattern(
    index: &ShapeIndex,
    pattern: &[Letter],
    max_value: u32,
) -> Option<(u32, Vec<Letter>)> {
    fn rec(
        index: &ShapeIndex,
        i: usize,
        max_code: u8,
        allowed: &dyn Fn(usize, Letter) -> bool,
        w: &mut [Letter],
    ) -> bool {
        if i == w.len() {
            return true;
        }
        let (lo, hi) = index.reading_bounds(i, w, max_code);
        for c in lo..=hi {
            let l = Letter::from_code(c);
            if allowed(i, l) {
                w[i] = l;
                if rec(index, i + 1, max_code, allowed, w) {
                    return true;
                }
            }
        }
        false
    }
    for k in 2..=max_value {
        let allowed = |i: usize, l: Letter| {
            if pattern[i] == OTHER {
                l.value() != k - 1 && l.value() != k
            } else {
                l == Letter::new(pattern[i].value() + k - 2, pattern[i].is_marked())
            }
        };
        let mut w = vec![Letter::from_code(0); index.len()];
        if rec(index, 0, (2 * max_value) as u8, &allowed, &mut w) {
            return Some((k, w));
        }
    }
    None
}

fn check_checklist(s: &SkewShape, max_value: u32) -> Outcome {
    let cells = s.cells().map_err(|e| e.to_string())?;
    let index = ShapeIndex::new(&cells);
    let mut bad = None;
    for_each_pattern(&index, |w| {
        if bad.is_none() && k_amenable_letters(w, 2) != checklist_letters(&index, w, 2) {
            if let Some(found) = realize_pattern(&index, w, max_value) {
                bad = Some(found);
            }
        }
    });
    match bad {
        None => Ok(()),
        Some((k, w)) => {
            let w: Vec<String> = w.iter().map(|l| l.to_string()).collect();
            Err(format!("{s}: k={k}, reading word {}", w.join(" ")))
        }
    }
}

fn check_leading(s: &SkewShape) -> Outcome {
    let cells = s.cells().map_err(|e| e.to_string())?;
    let e = expand_cells(&cells);
    let nu = lex_max_content(&cells);
    let (top, c) = e
        .descending()
        .next()
        .ok_or_else(|| format!("{s}: empty expansion"))?;
    ensure(*top == nu && c == leading_coefficient(&cells), || {
        format!(
            "{s}: leading term {c}·Q[{top}], expected Q[{nu}] with coefficient {}",
            leading_coefficient(&cells)
        )
    })
}

fn check_classification(s: &SkewShape) -> Outcome {
    let e = expand(s);
    let r = classify(s).map_err(|e| format!("{s}: {e}"))?;
    match (&r.verdict, e.single_term()) {
        (Verdict::Homogeneous { k, nu, .. }, Some((k2, nu2))) => {
            ensure(k == &k2 && nu == nu2, || {
                format!("{s}: {r} but expansion is {e}")
            })
        }
        (Verdict::NotHomogeneous { witness, .. }, None) => match witness {
            Some(w) => ensure(e.coefficient(&w.content) > 0, || {
                format!("{s}: witness content {} missing from {e}", w.content)
            }),
            None => Ok(()),
        },
        _ => Err(format!("{s}: {r} but expansion is {e}")),
    }
}

fn check_ot(s: &SkewShape) -> Outcome {
    let cells = s.cells().map_err(|e| e.to_string())?;
    let ot = normalize_cells(&orthogonal_transpose_cells(&cells));
    ensure(expand_cells(&cells) == expand_cells(&ot), || {
        format!("{s}: expansion changes under the orthogonal transpose")
    })?;
    let mut tableaux = amenable_tableaux(&cells, None);
    tableaux.push(
        canonical_tableau(&cells)
            .map_err(|e| e.to_string())?
            .tableau,
    );
    for t in tableaux {
        let f = lambda_flip(&t).map_err(|e| format!("{s}: flip failed: {e}\n{t}"))?;
        let mut want = t.content().total;
        let a = want.iter().position(|&x| x > 0).unwrap_or(0);
        want[a..].reverse();
        let mut got = f.content().total;
        got.resize(want.len(), 0);
        ensure(
            got == want && f.cells() == &orthogonal_transpose_cells(&cells),
            || format!("{s}: flip content {got:?}, expected {want:?}\n{t}"),
        )?;
    }
    Ok(())
}

fn check_symmetry(lambda: &StrictPartition) -> Outcome {
    let n = lambda.size();
    for a in 0..=n {
        for mu in strict_partitions(a) {
            let left = expand(&SkewShape::new(lambda.clone(), mu.clone()));
            for nu in strict_partitions(n - a) {
                let right = expand(&SkewShape::new(lambda.clone(), nu.clone()));
                ensure(left.coefficient(&nu) == right.coefficient(&mu), || {
                    format!("{lambda}: f(μ={mu}, ν={nu}) is not symmetric")
                })?;
            }
        }
    }
    Ok(())
}

fn check_row_strip(lambda: &StrictPartition) -> Outcome {
    for n in 1..=lambda.part(1) {
        let shape = SkewShape::new(lambda.clone(), StrictPartition::new(vec![n]).unwrap());
        let brute = expand(&shape);
        let closed = decompose_row_strip(lambda, n).map_err(|e| e.to_string())?;
        ensure(brute == closed, || {
            format!("{shape}: closed form {closed} vs {brute}")
        })?;
        if n == 1 {
            ensure(decompose_single_box(lambda) == brute, || {
                format!("{shape}: corner rule")
            })?;
        }
        if n + 1 == lambda.part(1) {
            let b = decompose_border_minus_one(lambda).map_err(|e| e.to_string())?;
            ensure(b == brute, || {
                format!("{shape}: border rule {b} vs {brute}")
            })?;
        }
    }
    Ok(())
}

fn run_check<T: Sync>(
    name: &'static str,
    items: &[T],
    f: impl Fn(&T) -> Outcome + Sync,
) -> CheckReport {
    let mut failures: Vec<String> = items.par_iter().filter_map(|x| f(x).err()).collect();
    failures.sort();
    log::info!("{name}: {} cases, {} failures", items.len(), failures.len());
    CheckReport {
        name,
        cases: items.len(),
        failures,
    }
}

/// Runs every check; reports come back in a fixed order.
pub fn sweep(opts: &SweepOptions) -> Vec<CheckReport> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs.max(1))
        .build()
        .expect("thread pool");
    pool.install(|| {
        let shapes = basic_shapes(opts.max_cells);
        let outers = outer_partitions(opts.max_cells);
        let cache = QCache::default();
        vec![
            run_check("oracle", &shapes, |s| check_oracle(s, &cache)),
            run_check("strict-content", &shapes, check_strict_contents),
            run_check("checklist", &shapes, |s| check_checklist(s, opts.max_value)),
            run_check("leading-term", &shapes, check_leading),
            run_check("classification", &shapes, check_classification),
            run_check("orthogonal-transpose", &shapes, check_ot),
            run_check("symmetry", &outers, check_symmetry),
            run_check("row-strip", &outers, check_row_strip),
        ]
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn patterns_cover_every_tableau() {
        use crate::tableaux::for_each_tableau;
        use std::collections::BTreeSet;
        for s in basic_shapes(5) {
            let index = ShapeIndex::new(&s.cells().unwrap());
            let mut patterns = BTreeSet::new();
            for_each_pattern(&index, |w| {
                patterns.insert(w.to_vec());
            });
            for_each_tableau(&index, 5, |w| {
                for k in 2..=5 {
                    let p: Vec<Letter> = w
                        .iter()
                        .map(|l| match l.value() {
                            v if v == k - 1 || v == k => Letter::new(v + 2 - k, l.is_marked()),
                            _ => OTHER,
                        })
                        .collect();
                    assert!(patterns.contains(&p), "{s}");
                    assert_eq!(k_amenable_letters(w, k), k_amenable_letters(&p, 2), "{s}");
                    assert_eq!(
                        checklist_letters(&index, w, k),
                        checklist_letters(&index, &p, 2),
                        "{s}"
                    );
                    let (k2, real) = realize_pattern(&index, &p, 5).unwrap();
                    assert!(k2 <= k);
                    let _ = real;
                }
            });
        }
    }

    #[test]
    fn small_sweep_passes() {
        let reports = sweep(&SweepOptions {
            max_cells: 4,
            max_value: 4,
            jobs: 1,
        });
        assert_eq!(reports.len(), 8);
        for r in &reports {
            assert!(r.passed(), "{r}");
            assert!(r.cases > 0);
        }
    }
}
