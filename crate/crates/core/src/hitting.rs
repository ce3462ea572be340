//! Exact minimum hitting sets by branch and bound.

/// Smallest set of elements meeting every support, returned as a bitmask.
/// Supports are bitmasks over at most 64 elements; an empty support can never
/// be hit and yields `None`.
pub fn min_hitting_set(supports: &[u64]) -> Option<u64> {
    if supports.contains(&0) {
        return None;
    }
    let mut sets: Vec<u64> = supports.to_vec();
    sets.sort_by_key(|s| (s.count_ones(), *s));
    sets.dedup();
    // a superset of another support is hit whenever the smaller one is
    let minimal: Vec<u64> = sets
        .iter()
        .copied()
        .filter(|&s| !sets.iter().any(|&t| t != s && t & s == t))
        .collect();
    let mut best = minimal
        .iter()
        .fold(0u64, |acc, s| acc | (1 << s.trailing_zeros()));
    search(&minimal, 0, &mut best);
    Some(best)
}

/// Number of pairwise disjoint unhit supports, a lower bound on what remains.
fn packing_bound(sets: &[u64], chosen: u64) -> u32 {
    let mut used = 0u64;
    let mut count = 0;
    for &s in sets {
        if s & chosen == 0 && s & used == 0 {
            used |= s;
            count += 1;
        }
    }
    count
}

fn search(sets: &[u64], chosen: u64, best: &mut u64) {
    let Some(&open) = sets.iter().find(|&&s| s & chosen == 0) else {
        if chosen.count_ones() < best.count_ones() {
            *best = chosen;
        }
        return;
    };
    if chosen.count_ones() + packing_bound(sets, chosen) >= best.count_ones() {
        return;
    }
    let mut bits = open;
    while bits != 0 {
        let b = bits & bits.wrapping_neg();
        bits &= bits - 1;
        search(sets, chosen | b, best);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute(supports: &[u64], n: u32) -> u32 {
        (0u64..1 << n)
            .filter(|h| supports.iter().all(|s| s & h != 0))
            .map(|h| h.count_ones())
            .min()
            .unwrap()
    }

    #[test]
    fn small_instances() {
        assert_eq!(min_hitting_set(&[0b11]).unwrap().count_ones(), 1);
        // {t,s1}, {t,s2}, {s1} with t=bit0
        assert_eq!(
            min_hitting_set(&[0b011, 0b101, 0b010])
                .unwrap()
                .count_ones(),
            2
        );
        assert_eq!(min_hitting_set(&[]), Some(0));
        assert_eq!(min_hitting_set(&[0b1, 0]), None);
    }

    #[test]
    fn agrees_with_exhaustive_search() {
        let mut x = 12345u64;
        for _ in 0..200 {
            let mut sets = Vec::new();
            for _ in 0..(x % 7 + 1) {
                x = x
                    .wrapping_mul(6364136223846793005)
                    .wrapping_add(1442695040888963407);
                let s = (x >> 33) & 0b11_1111;
                if s != 0 {
                    sets.push(s);
                }
            }
            let h = min_hitting_set(&sets).unwrap();
            assert!(sets.iter().all(|s| s & h != 0));
            assert_eq!(h.count_ones(), brute(&sets, 6));
        }
    }
}
