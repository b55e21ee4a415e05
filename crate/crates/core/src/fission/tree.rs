use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::irregular::{filtration, Filtration, IrregularType};
use crate::rootsys::{irreducible_components, CoordinatePartition, Family, RootSystem};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Colour {
    Green,
    Blue,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Diameter {
    Small,
    Large,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeNode {
    pub id: usize,
    pub level: usize,
    pub parent: Option<usize>,
    pub colour: Colour,
    pub diameter: Diameter,
    /// Ambient coordinates covered by the node.
    pub coords: Vec<usize>,
}

/// Leveled, decorated rooted tree.
///
/// Nodes are numbered top-down, level by level; within a level they are
/// ordered by parent and then by minimal coordinate, so the children of a
/// node are contiguous and the leaves come out in planar order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FissionTree {
    family: Family,
    rank: usize,
    nodes: Vec<TreeNode>,
    children: Vec<Vec<usize>>,
}

fn partition(rs: &RootSystem, f: &Filtration, level: usize) -> Result<CoordinatePartition> {
    Ok(irreducible_components(rs, f.level(level))?.partition)
}

impl FissionTree {
    pub fn from_filtration(rs: &RootSystem, f: &Filtration) -> Result<Self> {
        if !rs.family().is_classical() {
            return Err(Error::UnsupportedFamily(rs.family().to_string()));
        }
        let top = f.p() + 1;
        let diameter = |colour: Colour, coords: &[usize]| match (rs.family(), colour) {
            (Family::A, _) | (_, Colour::Blue) => Diameter::Large,
            _ if coords.len() == 1 => Diameter::Small,
            _ => Diameter::Large,
        };
        let groups = |p: CoordinatePartition| {
            let mut g: Vec<(Colour, Vec<usize>)> =
                p.parts.into_iter().map(|c| (Colour::Green, c)).collect();
            if !p.block.is_empty() {
                g.push((Colour::Blue, p.block));
            }
            g.sort_by_key(|(_, c)| c[0]);
            g
        };

        let mut nodes: Vec<TreeNode> = Vec::new();
        let top_groups = groups(partition(rs, f, top)?);
        if top_groups.len() != 1 {
            return Err(Error::MalformedTree("top level must be a single node".into()));
        }
        for (colour, coords) in top_groups {
            nodes.push(TreeNode {
                id: 0,
                level: top,
                parent: None,
                colour,
                diameter: diameter(colour, &coords),
                coords,
            });
        }
        let mut above: Vec<usize> = vec![0];
        for level in (1..top).rev() {
            let mut here = Vec::new();
            let mut pending = groups(partition(rs, f, level)?);
            for &parent in &above {
                let pc = nodes[parent].coords.clone();
                let (mine, rest): (Vec<_>, Vec<_>) =
                    pending.into_iter().partition(|(_, c)| pc.contains(&c[0]));
                pending = rest;
                for (colour, coords) in mine {
                    if !coords.iter().all(|x| pc.contains(x)) {
                        return Err(Error::MalformedTree(format!(
                            "part {coords:?} at level {level} straddles parents"
                        )));
                    }
                    let id = nodes.len();
                    nodes.push(TreeNode {
                        id,
                        level,
                        parent: Some(parent),
                        colour,
                        diameter: diameter(colour, &coords),
                        coords,
                    });
                    here.push(id);
                }
            }
            debug_assert!(pending.is_empty());
            above = here;
        }
        let tree = Self::from_nodes(rs.family(), rs.rank(), nodes)?;
        Ok(tree)
    }

    /// Rebuilds a tree from its node list and validates it.
    pub fn from_nodes(family: Family, rank: usize, nodes: Vec<TreeNode>) -> Result<Self> {
        let mut children = vec![Vec::new(); nodes.len()];
        for (i, n) in nodes.iter().enumerate() {
            if n.id != i {
                return Err(Error::MalformedTree(format!("node {i} has id {}", n.id)));
            }
            if let Some(p) = n.parent {
                if p >= nodes.len() {
                    return Err(Error::MalformedTree(format!("node {i} has unknown parent {p}")));
                }
                children[p].push(i);
            }
        }
        let tree = Self {
            family,
            rank,
            nodes,
            children,
        };
        tree.validate()?;
        Ok(tree)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn nodes(&self) -> &[TreeNode] {
        &self.nodes
    }

    pub fn node(&self, id: usize) -> &TreeNode {
        &self.nodes[id]
    }

    pub fn children(&self, id: usize) -> &[usize] {
        &self.children[id]
    }

    pub fn child_count(&self, id: usize) -> usize {
        self.children[id].len()
    }

    pub fn root(&self) -> usize {
        0
    }

    /// Top level, `p + 1`.
    pub fn top_level(&self) -> usize {
        self.nodes[0].level
    }

    /// Number of edges from the root to a leaf, i.e. `p`.
    pub fn height(&self) -> usize {
        self.top_level() - 1
    }

    /// Node counts for levels `1..=p+1`.
    pub fn level_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.top_level()];
        for n in &self.nodes {
            sizes[n.level - 1] += 1;
        }
        sizes
    }

    pub fn nodes_at(&self, level: usize) -> impl Iterator<Item = &TreeNode> {
        self.nodes.iter().filter(move |n| n.level == level)
    }

    /// Level-1 node ids in planar order.
    pub fn leaves(&self) -> Vec<usize> {
        self.nodes_at(1).map(|n| n.id).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.nodes.len() - 1
    }

    pub fn green_children(&self, id: usize) -> impl Iterator<Item = usize> + '_ {
        self.children[id]
            .iter()
            .copied()
            .filter(|&c| self.nodes[c].colour == Colour::Green)
    }

    pub fn blue_child(&self, id: usize) -> Option<usize> {
        self.children[id]
            .iter()
            .copied()
            .find(|&c| self.nodes[c].colour == Colour::Blue)
    }

    /// Checks levels, planar order and the colour and diameter rules.
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::MalformedTree(msg));
        let Some(root) = self.nodes.first() else {
            return bad("no nodes".into());
        };
        if root.parent.is_some() {
            return bad("node 0 must be the root".into());
        }
        if self.nodes.iter().skip(1).any(|n| n.parent.is_none()) {
            return bad("more than one root".into());
        }
        let top = root.level;
        if top == 0 {
            return bad("levels start at 1".into());
        }
        for n in &self.nodes[1..] {
            let p = &self.nodes[n.parent.unwrap()];
            if p.level != n.level + 1 {
                return bad(format!("node {} at level {} under level {}", n.id, n.level, p.level));
            }
            if p.colour < n.colour {
                return bad(format!("blue node {} under green node {}", n.id, p.id));
            }
            if p.diameter < n.diameter {
                return bad(format!("large node {} under small node {}", n.id, p.id));
            }
        }
        for n in &self.nodes {
            if n.level > 1 && self.children[n.id].is_empty() {
                return bad(format!("node {} above level 1 has no children", n.id));
            }
            let blue = self.children[n.id]
                .iter()
                .filter(|&&c| self.nodes[c].colour == Colour::Blue)
                .count();
            if blue > 1 {
                return bad(format!("node {} has {blue} blue children", n.id));
            }
            if n.colour == Colour::Blue && n.diameter == Diameter::Small {
                return bad(format!("blue node {} is small", n.id));
            }
            if n.diameter == Diameter::Small && self.children[n.id].len() > 1 {
                return bad(format!("small node {} has several children", n.id));
            }
        }
        // planar numbering: levels descend and children stay contiguous
        let order: Vec<(usize, usize)> = self.nodes[1..]
            .iter()
            .map(|n| (top - n.level, n.parent.unwrap()))
            .collect();
        if order.windows(2).any(|w| w[0] > w[1]) {
            return bad("nodes are not numbered level by level in planar order".into());
        }
        if self.family == Family::A {
            if self
                .nodes
                .iter()
                .any(|n| n.colour != Colour::Green || n.diameter != Diameter::Large)
            {
                return bad("type A trees are green and large".into());
            }
            if self.leaves().len() > self.rank + 1 {
                return bad("too many leaves".into());
            }
        }
        Ok(())
    }

    /// The blue node without blue children, if any node is blue.
    pub fn lowest_blue(&self) -> Option<usize> {
        self.nodes
            .iter()
            .filter(|n| n.colour == Colour::Blue)
            .map(|n| n.id)
            .find(|&id| self.blue_child(id).is_none())
    }

    /// Coordinates under each leaf, keyed by leaf id.
    pub fn leaf_coords(&self) -> BTreeMap<usize, Vec<usize>> {
        self.nodes_at(1).map(|n| (n.id, n.coords.clone())).collect()
    }
}

pub fn fission_tree(q: &IrregularType) -> Result<FissionTree> {
    if !q.rs().family().is_classical() {
        return Err(Error::UnsupportedFamily(q.rs().family().to_string()));
    }
    FissionTree::from_filtration(q.rs(), &filtration(q)?)
}
