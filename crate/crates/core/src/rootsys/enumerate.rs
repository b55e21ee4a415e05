use std::collections::BTreeMap;

use super::subsystem::{levi_of_element, RootSubsystem};
use super::system::{CartanElement, Family, RootSystem};
use crate::Rational;

/// Every Levi subsystem together with one element realizing it, sorted by
/// member list.
///
/// Elements are drawn from an integer grid large enough to separate every
/// coordinate pattern (values `0..=n` for `A_n`, `−n..=n` otherwise), so the
/// search is exhaustive but only practical for rank ≤ 5.
pub fn levi_representatives(rs: &RootSystem) -> Vec<(RootSubsystem, CartanElement)> {
    let dim = rs.ambient_dim();
    let n = rs.rank() as i64;
    let values: Vec<i64> = match rs.family() {
        Family::A => (0..=n).collect(),
        _ => (-n..=n).collect(),
    };
    let mut found: BTreeMap<RootSubsystem, CartanElement> = BTreeMap::new();
    let mut point = vec![0usize; dim];
    loop {
        let coords = point
            .iter()
            .map(|&k| Rational::from_integer(values[k].into()))
            .collect();
        let (el, _) = CartanElement::projected(rs, coords).expect("grid point has ambient dimension");
        let levi = levi_of_element(rs, &el).expect("dimension checked");
        found.entry(levi).or_insert(el);

        let mut k = 0;
        while k < dim {
            point[k] += 1;
            if point[k] < values.len() {
                break;
            }
            point[k] = 0;
            k += 1;
        }
        if k == dim {
            break;
        }
    }
    found.into_iter().collect()
}

pub fn enumerate_levis(rs: &RootSystem) -> Vec<RootSubsystem> {
    levi_representatives(rs).into_iter().map(|(l, _)| l).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binom(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    /// Set partitions of `m` points weighted by `2^(|block| − 1)`: signed
    /// type-A parts.
    fn signed_partitions(m: usize) -> usize {
        // T(m) = Σ_k C(m−1, k−1) 2^(k−1) T(m−k), choosing the block of the first point
        let mut t = vec![1usize; m + 1];
        for size in 1..=m {
            t[size] = (1..=size)
                .map(|k| binom(size - 1, k - 1) * (1 << (k - 1)) * t[size - k])
                .sum();
        }
        t[m]
    }

    fn bell(m: usize) -> usize {
        let mut row = vec![1usize];
        for _ in 0..m {
            let mut next = vec![*row.last().unwrap()];
            for x in &row {
                let v = next.last().unwrap() + x;
                next.push(v);
            }
            row = next;
        }
        row[0]
    }

    #[test]
    fn levi_counts_match_combinatorics() {
        for n in 1..=4 {
            let a = RootSystem::build(Family::A, n).unwrap();
            assert_eq!(enumerate_levis(&a).len(), bell(n + 1));
            let bc: usize = (0..=n).map(|z| binom(n, z) * signed_partitions(n - z)).sum();
            assert_eq!(enumerate_levis(&RootSystem::build(Family::B, n).unwrap()).len(), bc);
            assert_eq!(enumerate_levis(&RootSystem::build(Family::C, n).unwrap()).len(), bc);
            if n >= 2 {
                let d: usize = (0..=n)
                    .filter(|&z| z != 1)
                    .map(|z| binom(n, z) * signed_partitions(n - z))
                    .sum();
                assert_eq!(enumerate_levis(&RootSystem::build(Family::D, n).unwrap()).len(), d);
            }
        }
        let b4 = RootSystem::build(Family::B, 4).unwrap();
        assert_eq!(enumerate_levis(&b4).len(), 116);
        assert_eq!(enumerate_levis(&RootSystem::build(Family::D, 4).unwrap()).len(), 72);
        assert_eq!(enumerate_levis(&RootSystem::build(Family::G2, 2).unwrap()).len(), 8);
    }

    #[test]
    fn representatives_realize_their_levi() {
        let c3 = RootSystem::build(Family::C, 3).unwrap();
        for (levi, el) in levi_representatives(&c3) {
            assert_eq!(levi_of_element(&c3, &el).unwrap(), levi);
            assert!(levi.is_levi(&c3));
        }
    }
}
