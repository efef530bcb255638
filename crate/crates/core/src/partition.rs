//! Partitions of `0..n` compared as sets of sets.

/// Sorts each block, then orders blocks by their smallest member.
pub fn normalize(blocks: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = blocks
        .iter()
        .map(|b| {
            let mut b = b.clone();
            b.sort_unstable();
            b
        })
        .collect();
    out.sort();
    out
}

pub fn same_partition(a: &[Vec<usize>], b: &[Vec<usize>]) -> bool {
    normalize(a) == normalize(b)
}

/// True when the blocks are nonempty, pairwise disjoint and cover `0..n`.
pub fn is_partition_of(blocks: &[Vec<usize>], n: usize) -> bool {
    let mut seen = vec![false; n];
    for block in blocks {
        if block.is_empty() {
            return false;
        }
        for &x in block {
            if x >= n || seen[x] {
                return false;
            }
            seen[x] = true;
        }
    }
    seen.into_iter().all(|s| s)
}

/// Block index of every element.
pub fn block_index(blocks: &[Vec<usize>], n: usize) -> Vec<usize> {
    let mut idx = vec![usize::MAX; n];
    for (i, block) in blocks.iter().enumerate() {
        for &x in block {
            idx[x] = i;
        }
    }
    idx
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_does_not_matter() {
        let a = vec![vec![2, 0], vec![3, 1]];
        let b = vec![vec![1, 3], vec![0, 2]];
        assert!(same_partition(&a, &b));
        assert!(!same_partition(&a, &[vec![0, 1], vec![2, 3]]));
    }

    #[test]
    fn partition_checks() {
        assert!(is_partition_of(&[vec![0, 2], vec![1]], 3));
        assert!(!is_partition_of(&[vec![0, 2], vec![2, 1]], 3));
        assert!(!is_partition_of(&[vec![0]], 2));
        assert!(!is_partition_of(&[vec![0, 1], vec![]], 2));
    }
}
