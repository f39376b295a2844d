use std::collections::BTreeMap;

use serde::Serialize;

use crate::builder::{replay, BuildScript};
use crate::error::Error;
use crate::graph::Vertex;

/// Each vertex added by a step hangs below that step's pivot. The root is
/// the first pivot; the base vertex that is neither the first pivot nor its
/// neighbour hangs below the root as well, since it plays the same part as
/// the vertices of the first fan. The first neighbour is not in the tree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParentTree {
    pub root: Vertex,
    /// Child to parent.
    pub parent: BTreeMap<Vertex, Vertex>,
}

impl ParentTree {
    pub fn vertex_count(&self) -> usize {
        1 + self.parent.len()
    }

    pub fn children(&self, v: Vertex) -> Vec<Vertex> {
        self.parent.iter().filter(|&(_, &p)| p == v).map(|(&c, _)| c).collect()
    }

    /// Whether deleting the leaves leaves a path.
    pub fn is_caterpillar(&self) -> bool {
        let mut degree: BTreeMap<Vertex, usize> = BTreeMap::new();
        degree.entry(self.root).or_default();
        for (&c, &p) in &self.parent {
            *degree.entry(c).or_default() += 1;
            *degree.entry(p).or_default() += 1;
        }
        let inner = |v: Vertex| degree[&v] >= 2;
        let mut spine_degree: BTreeMap<Vertex, usize> = BTreeMap::new();
        for (&c, &p) in &self.parent {
            if inner(c) && inner(p) {
                *spine_degree.entry(c).or_default() += 1;
                *spine_degree.entry(p).or_default() += 1;
            }
        }
        // The inner vertices span a subtree, so it is a path exactly when
        // no vertex has three spine neighbours.
        spine_degree.values().all(|&d| d <= 2)
    }
}

pub fn parent_tree(s: &BuildScript) -> Result<ParentTree, Error> {
    replay(s).map_err(|e| Error::InvalidScript(e.to_string()))?;
    let Some(first) = s.steps.first() else {
        return Ok(ParentTree { root: s.base[0], parent: BTreeMap::new() });
    };
    let root = first.pivot;
    let mut parent = BTreeMap::new();
    if let Some(&third) = s.base.iter().find(|&&v| v != first.pivot && v != first.neighbour) {
        parent.insert(third, root);
    }
    for step in &s.steps {
        for &w in &step.add {
            parent.insert(w, step.pivot);
        }
    }
    Ok(ParentTree { root, parent })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builder::{extract_build_script, BuildStep};
    use crate::fixtures;

    #[test]
    fn small_trees() {
        let t3 = parent_tree(&extract_build_script(&fixtures::t3()).unwrap()).unwrap();
        assert_eq!(t3.vertex_count(), 1);
        assert!(t3.is_caterpillar());
        let fan = fixtures::fan2();
        let tree = parent_tree(&extract_build_script(&fan).unwrap()).unwrap();
        assert_eq!(tree.root, fan.v("x"));
        assert_eq!(tree.children(tree.root), vec![fan.v("w1"), fan.v("w2")]);
        assert!(tree.is_caterpillar());
    }

    #[test]
    fn brancher_tree_branches() {
        let b1 = fixtures::b1();
        let tree = parent_tree(&extract_build_script(&b1).unwrap()).unwrap();
        assert!(!tree.is_caterpillar());
        assert!(parent_tree(&extract_build_script(&fixtures::glue6()).unwrap()).unwrap().is_caterpillar());
    }

    #[test]
    fn spine_shapes() {
        let mut parent = BTreeMap::new();
        // 0 - 1 - 2 - 3 with leaves on 1 and 2.
        for (c, p) in [(1, 0), (2, 1), (3, 2), (4, 1), (5, 2)] {
            parent.insert(c, p);
        }
        assert!(ParentTree { root: 0, parent: parent.clone() }.is_caterpillar());
        // A branch of length two at 1 still leaves the path 2 - 1 - 6.
        parent.insert(6, 1);
        parent.insert(7, 6);
        assert!(ParentTree { root: 0, parent: parent.clone() }.is_caterpillar());
        // Once the root is inner too, 1 has three inner neighbours.
        parent.insert(8, 0);
        assert!(!ParentTree { root: 0, parent }.is_caterpillar());
    }

    #[test]
    fn rejects_invalid_scripts() {
        let s = BuildScript {
            base: [0, 1, 2],
            steps: vec![BuildStep { pivot: 0, neighbour: 2, add: vec![3] }, BuildStep { pivot: 0, neighbour: 1, add: vec![4] }],
            labels: None,
        };
        assert!(matches!(parent_tree(&s), Err(Error::InvalidScript(_))));
    }
}
