//! Exhaustive enumeration of small index sets, in a fixed order: by length,
//! then lexicographically.

use crate::index::{Composition, Partition, StrictPartition};

/// Every composition with parts in `min_part..=max_part` and length at most
/// `max_len`, the empty composition included.
pub fn compositions(min_part: i64, max_part: i64, max_len: usize) -> Vec<Composition> {
    let mut out = vec![Composition::new(Vec::new())];
    if min_part > max_part {
        return out;
    }
    let mut layer: Vec<Vec<i64>> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(layer.len() * (max_part - min_part + 1) as usize);
        for prefix in &layer {
            for part in min_part..=max_part {
                let mut parts = prefix.clone();
                parts.push(part);
                next.push(parts);
            }
        }
        out.extend(next.iter().cloned().map(Composition::new));
        layer = next;
    }
    out
}

/// Every partition with positive parts and size at most `max_size`.
pub fn partitions(max_size: i64) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    for size in 0..=max_size {
        partitions_of(size, size, &mut current, &mut out);
    }
    out.sort_by(|a: &Partition, b| a.len().cmp(&b.len()).then_with(|| a.parts().cmp(b.parts())));
    out
}

fn partitions_of(remaining: i64, cap: i64, current: &mut Vec<i64>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition::new_unchecked(current.clone()));
        return;
    }
    for part in (1..=cap.min(remaining)).rev() {
        current.push(part);
        partitions_of(remaining - part, part, current, out);
        current.pop();
    }
}

/// Every strict partition with parts in `1..=max_part`.
pub fn strict_partitions(max_part: i64) -> Vec<StrictPartition> {
    let max_part = max_part.max(0);
    let mut out: Vec<StrictPartition> = (0u64..1 << max_part)
        .map(|mask| {
            let parts: Vec<i64> = (1..=max_part).rev().filter(|p| mask & (1 << (p - 1)) != 0).collect();
            StrictPartition::new_unchecked(parts)
        })
        .collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.parts().cmp(b.parts())));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        // 1 + 7 + 49 + ... + 7^5
        assert_eq!(compositions(0, 6, 5).len(), 19_608);
        assert_eq!(compositions(1, 8, 2).len(), 1 + 8 + 64);
        // p(0) + ... + p(5) = 1 + 1 + 2 + 3 + 5 + 7
        assert_eq!(partitions(5).len(), 19);
        assert_eq!(strict_partitions(4).len(), 16);
    }

    #[test]
    fn order_is_by_length_then_lex() {
        let c = compositions(0, 1, 2);
        let got: Vec<Vec<i64>> = c.iter().map(|c| c.parts().to_vec()).collect();
        assert_eq!(got, vec![vec![], vec![0], vec![1], vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
        assert!(strict_partitions(3).iter().all(|p| p.parts().windows(2).all(|w| w[0] > w[1])));
    }
}
