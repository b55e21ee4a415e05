//! Left normal form `Δ^p A_1 ⋯ A_r` of a braid, with simple elements
//! stored as permutations.
//!
//! A simple element is written as the map `π` sending each start position
//! to the end position of its strand; products follow word order, so
//! `π_{AB} = π_B ∘ π_A`.

use super::word::BraidWord;

type Perm = Vec<usize>;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NormalForm {
    pub delta_power: i64,
    pub factors: Vec<Perm>,
}

fn delta(n: usize) -> Perm {
    (0..n).rev().collect()
}

/// `Δ X Δ⁻¹`.
fn flip(p: &Perm) -> Perm {
    let n = p.len();
    (0..n).map(|j| n - 1 - p[n - 1 - j]).collect()
}

fn inverse(p: &Perm) -> Perm {
    let mut inv = vec![0; p.len()];
    for (j, &x) in p.iter().enumerate() {
        inv[x] = j;
    }
    inv
}

/// `i` such that the simple element can start with `σ_{i+1}`.
fn starts(p: &Perm, i: usize) -> bool {
    p[i] > p[i + 1]
}

/// `i` such that the simple element can end with `σ_{i+1}`.
fn finishes(inv: &Perm, i: usize) -> bool {
    inv[i] > inv[i + 1]
}

/// Moves letters from `b` to `a` until `(a, b)` is left-weighted; returns
/// whether anything moved.
fn left_weight(a: &mut Perm, b: &mut Perm) -> bool {
    let n = a.len();
    let mut changed = false;
    loop {
        let inv = inverse(a);
        let Some(i) = (0..n - 1).find(|&i| starts(b, i) && !finishes(&inv, i)) else {
            return changed;
        };
        // a ← a σ_i, b ← σ_i⁻¹ b
        for x in a.iter_mut() {
            if *x == i {
                *x = i + 1;
            } else if *x == i + 1 {
                *x = i;
            }
        }
        b.swap(i, i + 1);
        changed = true;
    }
}

pub fn normal_form(w: &BraidWord) -> NormalForm {
    let n = w.strands();
    if n < 2 {
        return NormalForm {
            delta_power: 0,
            factors: Vec::new(),
        };
    }
    let d = delta(n);
    let mut power = 0i64;
    let mut factors: Vec<Perm> = Vec::with_capacity(w.len());
    for l in w.letters() {
        let i = l.index - 1;
        if l.inverse {
            // σ_i⁻¹ = Δ⁻¹ (Δ σ_i⁻¹); push Δ⁻¹ to the front past earlier factors
            for f in factors.iter_mut() {
                *f = flip(f);
            }
            power -= 1;
            let mut x: Perm = d.clone();
            for v in x.iter_mut() {
                if *v == i {
                    *v = i + 1;
                } else if *v == i + 1 {
                    *v = i;
                }
            }
            factors.push(x);
        } else {
            let mut s: Perm = (0..n).collect();
            s.swap(i, i + 1);
            factors.push(s);
        }
    }
    loop {
        let mut changed = false;
        for k in (0..factors.len().saturating_sub(1)).rev() {
            let (left, right) = factors.split_at_mut(k + 1);
            changed |= left_weight(&mut left[k], &mut right[0]);
        }
        if !changed {
            break;
        }
    }
    let identity: Perm = (0..n).collect();
    while factors.last() == Some(&identity) {
        factors.pop();
    }
    let leading = factors.iter().take_while(|f| **f == d).count();
    factors.drain(..leading);
    power += leading as i64;
    NormalForm {
        delta_power: power,
        factors,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::artin_action;
    use proptest::prelude::*;

    #[test]
    fn simple_cases() {
        let id = normal_form(&BraidWord::identity(3));
        assert_eq!(id.delta_power, 0);
        assert!(id.factors.is_empty());
        let delta = normal_form(&BraidWord::parse(3, "s1 s2 s1").unwrap());
        assert_eq!(delta.delta_power, 1);
        assert!(delta.factors.is_empty());
        let a = normal_form(&BraidWord::parse(3, "s1 s2 s1^-1").unwrap());
        let b = normal_form(&BraidWord::parse(3, "s2^-1 s1 s2").unwrap());
        assert_eq!(a, b);
    }

    fn word(n: usize, max: usize) -> impl Strategy<Value = BraidWord> {
        prop::collection::vec((1..n as i64, any::<bool>()), 0..=max).prop_map(move |ls| {
            let signed: Vec<i64> = ls.iter().map(|&(i, neg)| if neg { -i } else { i }).collect();
            BraidWord::from_signed(n, &signed).unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(400))]

        // the Artin action is faithful, so both deciders must agree
        #[test]
        fn agrees_with_artin_action(a in word(4, 7), b in word(4, 7)) {
            let by_nf = normal_form(&a) == normal_form(&b);
            let by_artin = artin_action(&a) == artin_action(&b);
            prop_assert_eq!(by_nf, by_artin);
        }

        #[test]
        fn agrees_on_trivial_products(a in word(4, 8)) {
            let w = a.then(&a.inverse()).unwrap();
            prop_assert_eq!(normal_form(&w), normal_form(&BraidWord::identity(4)));
        }
    }

    #[test]
    fn agrees_with_artin_action_on_near_misses() {
        // short words that differ by one relation or one letter
        let pairs = [
            ("s1 s3", "s3 s1", true),
            ("s1 s2 s1 s3", "s2 s1 s2 s3", true),
            ("s1 s2", "s2 s1", false),
            ("s1 s1 s2 s2", "s2 s2 s1 s1", false),
            ("s1 s2 s3 s1", "s2 s1 s2 s3", true),
            ("s1 s1 s2", "s2 s1 s1", false),
            ("s1^-1 s2 s1", "s2 s1 s2^-1", true),
        ];
        for (x, y, expected) in pairs {
            let (a, b) = (BraidWord::parse(4, x).unwrap(), BraidWord::parse(4, y).unwrap());
            assert_eq!(normal_form(&a) == normal_form(&b), expected, "{x} vs {y}");
            assert_eq!(artin_action(&a) == artin_action(&b), expected, "{x} vs {y}");
        }
    }
}
