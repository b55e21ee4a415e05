use super::decomposition::{Factor, GroupDecomposition};
use super::irregular::{filtration, Filtration, IrregularType};
use super::tree::{fission_tree, Colour, Diameter, FissionTree};
use crate::rootsys::{restricted_arrangement, ArrangementKind, Family, RootSystem};
use crate::{Error, Result};

/// One factor per tree node, read off child counts and decorations.
pub fn decomposition_from_tree(t: &FissionTree) -> Result<GroupDecomposition> {
    t.validate()?;
    let lowest_blue = t.lowest_blue();
    let factors = t
        .nodes()
        .iter()
        .map(|n| match (t.family(), n.colour) {
            (Family::A, _) | (_, Colour::Green) => Ok(Factor::PB(t.child_count(n.id))),
            (Family::B | Family::C, Colour::Blue) => Ok(Factor::PBBC(t.green_children(n.id).count())),
            (Family::D, Colour::Blue) if Some(n.id) == lowest_blue => {
                let (large, small) = t
                    .green_children(n.id)
                    .partition::<Vec<_>, _>(|&c| t.node(c).diameter == Diameter::Large);
                Ok(Factor::PBBCD(large.len(), small.len()))
            }
            (Family::D, Colour::Blue) => Ok(Factor::PBBC(t.green_children(n.id).count())),
            (Family::G2, _) => Err(Error::UnsupportedFamily("G2".into())),
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(GroupDecomposition::from_factors(factors))
}

pub fn factor_of_kind(kind: ArrangementKind) -> Factor {
    match kind {
        ArrangementKind::Empty => Factor::Trivial,
        ArrangementKind::TypeA(d) => Factor::PB(d + 1),
        ArrangementKind::TypeBC(d) => Factor::PBBC(d),
        ArrangementKind::TypeD(d) => Factor::PBBCD(0, d),
        ArrangementKind::Exotic(r, s) => Factor::PBBCD(r, s),
        ArrangementKind::G2Full => Factor::G2Braid,
    }
}

/// Factors contributed by `Φ_i ⊆ Φ_{i+1}` for `i = 1..=p`.
pub fn level_factors(rs: &RootSystem, f: &Filtration) -> Result<Vec<Vec<Factor>>> {
    f.levels()
        .windows(2)
        .map(|w| {
            if w[0] == w[1] {
                return Ok(Vec::new());
            }
            let arr = restricted_arrangement(rs, &w[0], &w[1])?;
            Ok(arr.kinds().into_iter().map(factor_of_kind).collect())
        })
        .collect()
}

pub fn oracle_decomposition(rs: &RootSystem, f: &Filtration) -> Result<GroupDecomposition> {
    let levels = level_factors(rs, f)?;
    Ok(GroupDecomposition::from_factors(levels.into_iter().flatten()))
}

/// Product over levels of the classified restricted arrangements.
pub fn decomposition_via_arrangements(q: &IrregularType) -> Result<GroupDecomposition> {
    oracle_decomposition(q.rs(), &filtration(q)?)
}

/// Both paths on a filtration; a disagreement is an error naming both.
pub fn checked_decomposition(rs: &RootSystem, f: &Filtration) -> Result<GroupDecomposition> {
    let oracle = oracle_decomposition(rs, f)?;
    if !rs.family().is_classical() {
        return Ok(oracle);
    }
    let tree = decomposition_from_tree(&FissionTree::from_filtration(rs, f)?)?;
    if tree != oracle {
        return Err(Error::PathDisagreement {
            tree: tree.to_string(),
            oracle: oracle.to_string(),
        });
    }
    Ok(tree)
}

/// The tree path for classical families and the oracle for `G₂`.
pub fn group_decomposition(q: &IrregularType) -> Result<GroupDecomposition> {
    if q.rs().family().is_classical() {
        decomposition_from_tree(&fission_tree(q)?)
    } else {
        decomposition_via_arrangements(q)
    }
}

pub fn decompose_checked(q: &IrregularType) -> Result<GroupDecomposition> {
    checked_decomposition(q.rs(), &filtration(q)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q_ALPHA1: [i64; 9] = [4, 3, 2, 1, 0, -1, -2, -3, -4];
    const Q_ALPHA2: [i64; 9] = [4, 4, 3, 2, 1, 0, -3, -4, -7];

    fn a(n: usize) -> RootSystem {
        RootSystem::build(Family::A, n).unwrap()
    }

    #[test]
    fn sl3_both_paths() {
        let q = IrregularType::from_ints(&a(2), &[&[-1, 1, 0], &[-1, -1, 2]]).unwrap();
        assert_eq!(decomposition_from_tree(&fission_tree(&q).unwrap()).unwrap().to_string(), "PB_2 x PB_2");
        assert_eq!(decomposition_via_arrangements(&q).unwrap().to_string(), "PB_2 x PB_2");
    }

    #[test]
    fn q1_and_q2() {
        let q1 = IrregularType::from_ints(
            &a(8),
            &[&Q_ALPHA1, &Q_ALPHA2, &[2, 2, 1, 1, 1, 0, 0, 0, -7]],
        )
        .unwrap();
        assert_eq!(decompose_checked(&q1).unwrap().to_string(), "PB_2 x PB_3^2 x PB_4");
        let q2 = IrregularType::from_ints(&a(8), &[&Q_ALPHA1, &[4, 1, 1, 0, 0, 0, -2, -2, -2]]).unwrap();
        let t = fission_tree(&q2).unwrap();
        assert_eq!(t.level_sizes(), vec![9, 4, 1]);
        assert_eq!(decompose_checked(&q2).unwrap().to_string(), "PB_2 x PB_3^2 x PB_4");
    }

    #[test]
    fn generic_d4() {
        let d4 = RootSystem::build(Family::D, 4).unwrap();
        let q = IrregularType::from_ints(&d4, &[&[1, 2, 3, 4]]).unwrap();
        let d = decompose_checked(&q).unwrap();
        assert_eq!(d.flat(), vec![Factor::PBBCD(0, 4)]);
    }

    #[test]
    fn g2_cases() {
        let g2 = RootSystem::build(Family::G2, 2).unwrap();
        let q = IrregularType::from_ints(&g2, &[&[1, 2, -3]]).unwrap();
        assert_eq!(decompose_checked(&q).unwrap().to_string(), "PBraid(G2)");
        // Φ_1 = ∅, Φ_2 = short A1 (x1 = x2 at the top coefficient), Φ_3 = G2
        let q = IrregularType::from_ints(&g2, &[&[1, 0, -1], &[1, 1, -2]]).unwrap();
        let d = decompose_checked(&q).unwrap();
        assert_eq!(d.to_string(), "PB_2 x PB_2");
        assert!(fission_tree(&q).is_err());
    }

    #[test]
    fn trailing_zero_coefficients_are_trivial_levels() {
        let b2 = RootSystem::build(Family::B, 2).unwrap();
        let q = IrregularType::from_ints(&b2, &[&[1, 2], &[0, 0], &[0, 0]]).unwrap();
        let f = filtration(&q).unwrap();
        let levels = level_factors(&b2, &f).unwrap();
        assert_eq!(levels[0], vec![Factor::PBBC(2)]);
        assert!(levels[1].is_empty() && levels[2].is_empty());
        assert_eq!(decompose_checked(&q).unwrap().to_string(), "PB_BC_2");
    }

    #[test]
    fn d3_exotic_string() {
        let d3 = RootSystem::build(Family::D, 3).unwrap();
        // leading coefficient kills e1 − e2 only
        let q = IrregularType::from_ints(&d3, &[&[1, 2, 3], &[1, 1, 2]]).unwrap();
        let d = decompose_checked(&q).unwrap();
        assert!(d.to_string().contains("PB_BCD(1,1) [~ PB_3]"), "{d}");
    }
}
