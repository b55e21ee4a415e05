use serde::Serialize;

use super::operad::{block_braid, direct_sum};
use super::word::{BraidWord, Letter};
use crate::fission::FissionTree;
use crate::rootsys::Family;
use crate::{Error, Result};

/// The standard generator `A_ij` of `PB_k` (1-based, `i < j`):
/// `σ_{j−1} ⋯ σ_{i+1} σ_i² σ_{i+1}⁻¹ ⋯ σ_{j−1}⁻¹`.
pub fn standard_generator(k: usize, i: usize, j: usize) -> Result<BraidWord> {
    if !(1 <= i && i < j && j <= k) {
        return Err(Error::GeneratorOutOfRange { index: j, strands: k });
    }
    let mut letters: Vec<Letter> = (i + 1..j).rev().map(Letter::pos).collect();
    letters.push(Letter::pos(i));
    letters.push(Letter::pos(i));
    letters.extend((i + 1..j).map(Letter::neg));
    BraidWord::new(k, letters)
}

/// All `A_ij` of `PB_k` in lexicographic order of `(i, j)`.
pub fn standard_generators(k: usize) -> Vec<BraidWord> {
    (1..=k)
        .flat_map(|i| (i + 1..=k).map(move |j| standard_generator(k, i, j).unwrap()))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NodeGenerators {
    pub node: usize,
    pub level: usize,
    pub children: usize,
    /// `(i, j, word)` for the lifted `A_ij`, children numbered from 1.
    pub generators: Vec<(usize, usize, BraidWord)>,
}

/// Pure braid generators of every node with at least two children, lifted
/// to braids on the leaves by cabling each lower node with the identity.
pub fn cabled_group_generators(t: &FissionTree) -> Result<Vec<NodeGenerators>> {
    if t.family() != Family::A {
        return Err(Error::UnsupportedFamily(t.family().to_string()));
    }
    let mut out = Vec::new();
    for node in t.nodes() {
        let k = t.child_count(node.id);
        if k < 2 {
            continue;
        }
        let below = node.level - 1;
        let row: Vec<usize> = t.nodes_at(below).map(|n| n.id).collect();
        let first = t.children(node.id)[0];
        let offset = row.iter().position(|&id| id == first).expect("child on the level below");
        let mut generators = Vec::new();
        for i in 1..=k {
            for j in i + 1..=k {
                let a = standard_generator(k, i, j)?;
                let mut word = direct_sum(&[
                    BraidWord::identity(offset),
                    a,
                    BraidWord::identity(row.len() - offset - k),
                ]);
                for level in (2..=below).rev() {
                    let widths: Vec<usize> = t.nodes_at(level).map(|n| t.child_count(n.id)).collect();
                    word = block_braid(&word, &widths)?;
                }
                generators.push((i, j, word));
            }
        }
        out.push(NodeGenerators {
            node: node.id,
            level: node.level,
            children: k,
            generators,
        });
    }
    Ok(out)
}

/// Leaves (as positions in planar order) under each child of `node`.
pub fn leaf_blocks(t: &FissionTree, node: usize) -> Vec<Vec<usize>> {
    let leaves = t.leaves();
    t.children(node)
        .iter()
        .map(|&c| {
            let mut stack = vec![c];
            let mut under = Vec::new();
            while let Some(x) = stack.pop() {
                if t.node(x).level == 1 {
                    under.push(leaves.iter().position(|&l| l == x).unwrap());
                } else {
                    stack.extend(t.children(x));
                }
            }
            under.sort_unstable();
            under
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{braids_equal, linking_matrix};
    use crate::fission::{fission_tree, IrregularType};
    use crate::rootsys::RootSystem;

    fn tree(n: usize, rows: &[&[i64]]) -> FissionTree {
        let rs = RootSystem::build(Family::A, n).unwrap();
        fission_tree(&IrregularType::from_ints(&rs, rows).unwrap()).unwrap()
    }

    #[test]
    fn standard_generator_words() {
        assert_eq!(standard_generator(3, 1, 3).unwrap().to_string(), "s2 s1 s1 s2^-1");
        assert_eq!(standard_generators(4).len(), 6);
        for g in standard_generators(5) {
            assert!(g.is_pure());
        }
    }

    #[test]
    fn sl3_tree_generators() {
        let t = tree(2, &[&[-1, 1, 0], &[-1, -1, 2]]);
        let gens = cabled_group_generators(&t).unwrap();
        let words: Vec<BraidWord> = gens.iter().flat_map(|g| g.generators.iter().map(|x| x.2.clone())).collect();
        assert_eq!(words.len(), 2);
        let as_text: Vec<String> = words.iter().map(|w| w.to_string()).collect();
        assert!(as_text.contains(&"s1 s1".to_string()), "{as_text:?}");
        let root_gen = BraidWord::parse(3, "s2 s1 s1 s2").unwrap();
        assert!(words.iter().any(|w| braids_equal(w, &root_gen).unwrap()));
        let ab = words[0].then(&words[1]).unwrap();
        let ba = words[1].then(&words[0]).unwrap();
        assert!(braids_equal(&ab, &ba).unwrap());
    }

    #[test]
    fn single_node_tree_gives_standard_generators() {
        let t = tree(3, &[&[0, 1, 2, -3]]);
        let gens = cabled_group_generators(&t).unwrap();
        assert_eq!(gens.len(), 1);
        let words: Vec<BraidWord> = gens[0].generators.iter().map(|g| g.2.clone()).collect();
        assert_eq!(words, standard_generators(4));
    }

    #[test]
    fn q2_generator_count_and_blocks() {
        let t = tree(8, &[&[4, 3, 2, 1, 0, -1, -2, -3, -4], &[4, 1, 1, 0, 0, 0, -2, -2, -2]]);
        let gens = cabled_group_generators(&t).unwrap();
        let mut sizes: Vec<usize> = gens.iter().map(|g| g.generators.len()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 3, 3, 6]);
        for g in &gens {
            let blocks = leaf_blocks(&t, g.node);
            for (i, j, w) in &g.generators {
                let m = linking_matrix(w).unwrap();
                for u in 0..9 {
                    for v in 0..9 {
                        let expected = (blocks[i - 1].contains(&u) && blocks[j - 1].contains(&v))
                            || (blocks[i - 1].contains(&v) && blocks[j - 1].contains(&u));
                        assert_eq!(m.get(u, v), expected as i64);
                    }
                }
            }
        }
    }

    #[test]
    fn rejects_other_families() {
        let rs = RootSystem::build(Family::B, 2).unwrap();
        let t = fission_tree(&IrregularType::from_ints(&rs, &[&[1, 2]]).unwrap()).unwrap();
        assert!(cabled_group_generators(&t).is_err());
    }
}
