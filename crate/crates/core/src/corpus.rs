//! Finite families of shapes for sweeps and tests.

use crate::shapes::{strict_partitions, SkewShape, StrictPartition};

/// Strict partitions with every part at most `max_part`, as subsets of
/// `{1..max_part}`, largest first.
pub fn partitions_with_max_part(max_part: u32) -> Vec<StrictPartition> {
    let mut out: Vec<StrictPartition> = (0u64..1 << max_part)
        .map(|mask| {
            let parts = (1..=max_part)
                .rev()
                .filter(|&p| mask >> (p - 1) & 1 == 1)
                .collect();
            StrictPartition::new(parts).expect("distinct parts")
        })
        .collect();
    out.sort_by(|a, b| b.cmp(a));
    out
}

/// Every basic skew shape with between 1 and `max_cells` boxes. A basic
/// shape with `n` boxes has at most `n` rows and `λ_1 ≤ 2n - 1`, so the
/// search is finite.
pub fn basic_shapes(max_cells: u32) -> Vec<SkewShape> {
    let mut out = Vec::new();
    if max_cells == 0 {
        return out;
    }
    for lambda in partitions_with_max_part(2 * max_cells - 1) {
        if lambda.is_empty() || lambda.len() as u32 > max_cells {
            continue;
        }
        let mut mu = Vec::new();
        inner_parts(&lambda, max_cells, &mut mu, &mut out);
    }
    out.sort_by(|a, b| (a.size(), a.outer(), a.inner()).cmp(&(b.size(), b.outer(), b.inner())));
    out
}

/// Extends `mu` part by part; each part must leave its row nonempty.
fn inner_parts(lambda: &StrictPartition, budget: u32, mu: &mut Vec<u32>, out: &mut Vec<SkewShape>) {
    let i = mu.len() + 1;
    let rest: u32 = lambda.parts()[mu.len()..].iter().sum();
    if rest <= budget {
        let s = SkewShape::new(lambda.clone(), StrictPartition::new(mu.clone()).unwrap());
        if s.is_basic() {
            out.push(s);
        }
    }
    if i >= lambda.len() {
        return;
    }
    let li = lambda.part(i);
    let hi = (li - 1)
        .min(lambda.part(i + 1) + 1)
        .min(mu.last().map_or(u32::MAX, |&m| m - 1));
    let lo = li.saturating_sub(budget).max(1);
    for m in lo..=hi {
        mu.push(m);
        inner_parts(lambda, budget - (li - m), mu, out);
        mu.pop();
    }
}

/// Every strict partition of size `1..=max_size`.
pub fn outer_partitions(max_size: u32) -> Vec<StrictPartition> {
    (1..=max_size).flat_map(strict_partitions).collect()
}
