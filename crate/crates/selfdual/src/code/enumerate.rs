//! Low-weight message enumeration over an information set.
//!
//! Messages of a fixed weight t are walked in revolving-door order: each
//! successive combination swaps exactly one element, so each successive
//! codeword image is two row-XORs away from the previous one. Work is split
//! across threads by the smallest selected row index; per-partition results
//! merge by addition or minimum, so totals are independent of thread count.

use rayon::prelude::*;

use crate::gf2::BitWord;

/// Visits `base ⊕ XOR(rows[c])` for every t-subset c of `lo..rows.len()`,
/// in revolving-door order.
pub(crate) fn scan_subsets(
    rows: &[BitWord],
    lo: usize,
    t: usize,
    base: BitWord,
    visit: &mut impl FnMut(&BitWord),
) {
    let hi = rows.len();
    debug_assert!(t <= hi - lo);
    let mut acc = base;
    for r in &rows[lo..lo + t] {
        acc.xor_assign(r);
    }
    visit(&acc);
    gray(rows, lo, hi, t, true, &mut acc, visit);
}

/// Emits the revolving-door swap sequence taking the first t-combination of
/// [lo, hi) to the last (forward) or back (reverse), mutating `acc` and
/// visiting after every swap. First = {lo..lo+t}, last = {lo..lo+t-1, hi-1}.
fn gray(
    rows: &[BitWord],
    lo: usize,
    hi: usize,
    t: usize,
    forward: bool,
    acc: &mut BitWord,
    visit: &mut impl FnMut(&BitWord),
) {
    let m = hi - lo;
    if t == 0 || t == m {
        return;
    }
    let pivot = if t >= 2 { lo + t - 2 } else { hi - 2 };
    if forward {
        gray(rows, lo, hi - 1, t, true, acc, visit);
        acc.xor_assign(&rows[pivot]);
        acc.xor_assign(&rows[hi - 1]);
        visit(acc);
        gray(rows, lo, hi - 1, t - 1, false, acc, visit);
    } else {
        gray(rows, lo, hi - 1, t - 1, true, acc, visit);
        acc.xor_assign(&rows[hi - 1]);
        acc.xor_assign(&rows[pivot]);
        visit(acc);
        gray(rows, lo, hi - 1, t, false, acc, visit);
    }
}

/// Number of t-subsets of an n-set.
pub(crate) fn binomial(n: usize, t: usize) -> u64 {
    if t > n {
        return 0;
    }
    let t = t.min(n - t);
    let mut acc: u128 = 1;
    for i in 0..t {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

/// Total messages enumerated for all weights 0..=h over one n-row set.
pub(crate) fn messages_up_to(n: usize, h: usize) -> u64 {
    (0..=h.min(n)).map(|t| binomial(n, t)).sum()
}

/// Minimum image weight over all weight-t messages (t >= 1), i.e. the
/// minimum of wt(XOR of any t of the rows).
pub(crate) fn level_min_image_weight(rows: &[BitWord], t: usize) -> usize {
    let n = rows.len();
    if t == 0 || t > n {
        return usize::MAX;
    }
    (0..=n - t)
        .into_par_iter()
        .map(|first| {
            let mut best = usize::MAX;
            scan_subsets(rows, first + 1, t - 1, rows[first], &mut |acc| {
                let w = acc.weight();
                if w < best {
                    best = w;
                }
            });
            best
        })
        .min()
        .unwrap_or(usize::MAX)
}

/// Histogram of total codeword weight (t + image weight) over all weight-t
/// messages, for totals <= max_total. When `image_above` is set, only
/// codewords whose image weight strictly exceeds it are counted (the
/// second-pass double-counting filter).
pub(crate) fn level_weight_counts(
    rows: &[BitWord],
    t: usize,
    max_total: usize,
    image_above: Option<usize>,
) -> Vec<u64> {
    let n = rows.len();
    let zero = vec![0u64; max_total + 1];
    if t > n {
        return zero;
    }
    if t == 0 {
        let mut counts = zero;
        if image_above.is_none() {
            counts[0] = 1;
        }
        return counts;
    }
    (0..=n - t)
        .into_par_iter()
        .map(|first| {
            let mut counts = vec![0u64; max_total + 1];
            let floor = image_above.unwrap_or(0);
            scan_subsets(rows, first + 1, t - 1, rows[first], &mut |acc| {
                let iw = acc.weight();
                let w = iw + t;
                if w <= max_total && (image_above.is_none() || iw > floor) {
                    counts[w] += 1;
                }
            });
            counts
        })
        .reduce(
            || vec![0u64; max_total + 1],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y;
                }
                a
            },
        )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit_rows(n: usize) -> Vec<BitWord> {
        (0..n)
            .map(|i| {
                let mut w = BitWord::zeros(n);
                w.set(i, true);
                w
            })
            .collect()
    }

    /// Collect the subsets visited by scan_subsets as sorted index lists.
    fn visited_subsets(n: usize, t: usize) -> Vec<Vec<usize>> {
        let rows = unit_rows(n);
        let mut out = Vec::new();
        if t == 0 {
            return vec![vec![]];
        }
        for first in 0..=n - t {
            scan_subsets(&rows, first + 1, t - 1, rows[first], &mut |acc| {
                out.push(acc.ones_iter().collect::<Vec<_>>());
            });
        }
        out
    }

    #[test]
    fn revolving_door_visits_each_combination_once() {
        for n in 1..=9 {
            for t in 1..=n {
                let subsets = visited_subsets(n, t);
                assert_eq!(subsets.len() as u64, binomial(n, t), "n={n} t={t}");
                let mut dedup = subsets.clone();
                dedup.sort();
                dedup.dedup();
                assert_eq!(dedup.len(), subsets.len(), "n={n} t={t} duplicates");
                assert!(subsets.iter().all(|s| s.len() == t));
            }
        }
    }

    #[test]
    fn revolving_door_swaps_one_element_per_step() {
        // within a fixed-first partition, successive subsets differ by
        // exactly one element
        let n = 8;
        for t in 2..=n {
            let rows = unit_rows(n);
            let mut prev: Option<Vec<usize>> = None;
            scan_subsets(&rows, 1, t - 1, rows[0], &mut |acc| {
                let cur: Vec<usize> = acc.ones_iter().collect();
                if let Some(p) = &prev {
                    let shared = cur.iter().filter(|i| p.contains(i)).count();
                    assert_eq!(shared, t - 1, "prev {p:?} cur {cur:?}");
                }
                prev = Some(cur);
            });
        }
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(34, 7), 5_379_616);
        assert_eq!(binomial(36, 8), 30_260_340);
        assert_eq!(binomial(5, 0), 1);
        assert_eq!(binomial(4, 5), 0);
        assert_eq!(messages_up_to(4, 4), 16);
    }

    #[test]
    fn level_counts_match_direct_enumeration() {
        // random-ish small row set, compare against a direct 2^n scan
        let rows: Vec<BitWord> = ["10110", "01011", "11100", "00111", "10101"]
            .iter()
            .map(|s| BitWord::from_bit_str(s))
            .collect();
        let n = rows.len();
        for t in 0..=n {
            let got = level_weight_counts(&rows, t, 10, None);
            let mut expect = vec![0u64; 11];
            for mask in 0u32..(1 << n) {
                if mask.count_ones() as usize != t {
                    continue;
                }
                let mut acc = BitWord::zeros(5);
                for (i, row) in rows.iter().enumerate() {
                    if (mask >> i) & 1 == 1 {
                        acc.xor_assign(row);
                    }
                }
                expect[acc.weight() + t] += 1;
            }
            assert_eq!(got, expect, "t={t}");
        }
    }
}
