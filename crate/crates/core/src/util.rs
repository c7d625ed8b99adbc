use std::collections::hash_map::DefaultHasher;
use std::collections::{HashMap, HashSet};
use std::hash::BuildHasherDefault;

/// Hash map with a fixed hasher so runs are reproducible.
pub type DetMap<K, V> = HashMap<K, V, BuildHasherDefault<DefaultHasher>>;
pub type DetSet<K> = HashSet<K, BuildHasherDefault<DefaultHasher>>;

/// `base^exp` as a float, used for loose size-bound assertions.
pub fn pow_f64(base: usize, exp: usize) -> f64 {
    (base as f64).powi(exp as i32)
}

/// All set partitions of `0..n` as block-index vectors (restricted growth strings).
pub fn set_partitions(n: usize, mut visit: impl FnMut(&[usize], usize)) {
    fn go(i: usize, n: usize, rgs: &mut Vec<usize>, blocks: usize, visit: &mut dyn FnMut(&[usize], usize)) {
        if i == n {
            visit(rgs, blocks);
            return;
        }
        for b in 0..=blocks {
            rgs.push(b);
            go(i + 1, n, rgs, blocks.max(b + 1), visit);
            rgs.pop();
        }
    }
    go(0, n, &mut Vec::with_capacity(n), 0, &mut visit);
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bell_numbers() {
        let counts: Vec<usize> = (0..7)
            .map(|n| {
                let mut c = 0;
                set_partitions(n, |_, _| c += 1);
                c
            })
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 15, 52, 203]);
    }
}
