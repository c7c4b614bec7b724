//! Modular decomposition and weighted chromatic composition.
//!
//! A module is a vertex set that every outside vertex sees entirely or not
//! at all. The decomposition is computed naively: a graph that is neither
//! disconnected nor co-disconnected has pairwise disjoint maximal modules,
//! and the maximal module around `v` is the union of the closures of all
//! pairs `{v, u}` that stay proper.

use std::collections::BTreeMap;

use serde_json::{json, Value};
use thiserror::Error;

use crate::coloring::{ColoringError, MultiColoring, VertexWeights};
use crate::graph::{Graph, VertexSubset};

pub fn is_module(g: &Graph, m: &[usize]) -> bool {
    let mut inside = vec![false; g.n()];
    for &v in m {
        inside[v] = true;
    }
    (0..g.n()).filter(|&x| !inside[x]).all(|x| {
        let seen = m.iter().filter(|&&v| g.has_edge(x, v)).count();
        seen == 0 || seen == m.len()
    })
}

/// Smallest module containing `seed`: keep absorbing splitters, i.e.
/// outside vertices adjacent to some but not all members.
pub fn module_closure(g: &Graph, seed: &[usize]) -> VertexSubset {
    let n = g.n();
    let mut inside = vec![false; n];
    let mut count = vec![0usize; n];
    let mut size = 0;
    let add = |v: usize, inside: &mut Vec<bool>, count: &mut Vec<usize>, size: &mut usize| {
        if !inside[v] {
            inside[v] = true;
            *size += 1;
            for &x in g.neighbors(v) {
                count[x] += 1;
            }
        }
    };
    for &v in seed {
        add(v, &mut inside, &mut count, &mut size);
    }
    loop {
        let splitter = (0..n).find(|&x| !inside[x] && count[x] > 0 && count[x] < size);
        match splitter {
            Some(x) => add(x, &mut inside, &mut count, &mut size),
            None => break,
        }
    }
    (0..n).filter(|&v| inside[v]).collect()
}

/// No module other than singletons and the whole vertex set.
pub fn is_prime(g: &Graph) -> bool {
    let n = g.n();
    (0..n).all(|u| (u + 1..n).all(|v| module_closure(g, &[u, v]).len() == n))
}

/// Maximal proper modules of a connected and co-connected graph, ordered by
/// smallest member. They partition the vertex set.
pub fn maximal_modules(g: &Graph) -> Vec<VertexSubset> {
    let n = g.n();
    let mut part_of = vec![usize::MAX; n];
    let mut parts: Vec<VertexSubset> = Vec::new();
    for v in 0..n {
        if part_of[v] != usize::MAX {
            continue;
        }
        let mut members = vec![false; n];
        members[v] = true;
        for u in 0..n {
            if members[u] {
                continue;
            }
            let c = module_closure(g, &[v, u]);
            if c.len() < n {
                for &x in c.iter() {
                    members[x] = true;
                }
            }
        }
        let part: VertexSubset = (0..n).filter(|&x| members[x]).collect();
        for &x in part.iter() {
            part_of[x] = parts.len();
        }
        parts.push(part);
    }
    parts
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModularError {
    #[error("parts do not partition the vertex set")]
    NotPartition,
    #[error("part {0} is not a module")]
    NotModule(VertexSubset),
}

/// Quotient graph with one representative (the smallest id) per part;
/// quotient vertex `i` stands for `parts[i]`.
pub fn quotient(g: &Graph, parts: &[VertexSubset]) -> Result<(Graph, Vec<usize>), ModularError> {
    let mut seen = vec![false; g.n()];
    for &v in parts.iter().flat_map(|p| p.iter()) {
        if v >= g.n() || seen[v] {
            return Err(ModularError::NotPartition);
        }
        seen[v] = true;
    }
    if seen.iter().any(|&s| !s) || parts.iter().any(|p| p.is_empty()) {
        return Err(ModularError::NotPartition);
    }
    if let Some(bad) = parts.iter().find(|p| !is_module(g, p)) {
        return Err(ModularError::NotModule(bad.clone()));
    }
    let reps: Vec<usize> = parts.iter().map(|p| p[0]).collect();
    let (q, _) = g.induced(&reps).expect("representatives are in range");
    Ok((q, reps))
}

/// Modular decomposition tree. Vertex sets are in host-graph ids; children
/// are ordered by smallest vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MDTree {
    Vertex(usize),
    Parallel { span: VertexSubset, children: Vec<MDTree> },
    Series { span: VertexSubset, children: Vec<MDTree> },
    /// `quotient` vertex `i` is child `i`, represented by `reps[i]`.
    Prime { span: VertexSubset, children: Vec<MDTree>, quotient: Graph, reps: Vec<usize> },
}

impl MDTree {
    pub fn span(&self) -> VertexSubset {
        match self {
            MDTree::Vertex(v) => VertexSubset::new([*v]),
            MDTree::Parallel { span, .. } | MDTree::Series { span, .. } | MDTree::Prime { span, .. } => span.clone(),
        }
    }

    pub fn children(&self) -> &[MDTree] {
        match self {
            MDTree::Vertex(_) => &[],
            MDTree::Parallel { children, .. } | MDTree::Series { children, .. } | MDTree::Prime { children, .. } => {
                children
            }
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            MDTree::Vertex(_) => "vertex",
            MDTree::Parallel { .. } => "parallel",
            MDTree::Series { .. } => "series",
            MDTree::Prime { .. } => "prime",
        }
    }

    /// All prime nodes, in pre-order.
    pub fn prime_nodes(&self) -> Vec<&MDTree> {
        let mut out = Vec::new();
        fn walk<'a>(t: &'a MDTree, out: &mut Vec<&'a MDTree>) {
            if matches!(t, MDTree::Prime { .. }) {
                out.push(t);
            }
            for c in t.children() {
                walk(c, out);
            }
        }
        walk(self, &mut out);
        out
    }

    pub fn to_json(&self) -> Value {
        match self {
            MDTree::Vertex(v) => json!({ "kind": "vertex", "span": [v] }),
            MDTree::Parallel { span, children } | MDTree::Series { span, children } => json!({
                "kind": self.kind(),
                "span": span,
                "children": children.iter().map(MDTree::to_json).collect::<Vec<_>>(),
            }),
            MDTree::Prime { span, children, quotient, reps } => json!({
                "kind": "prime",
                "span": span,
                "children": children.iter().map(MDTree::to_json).collect::<Vec<_>>(),
                "quotient_edges": quotient.edges().map(|(u, v)| [u, v]).collect::<Vec<_>>(),
                "reps": reps,
            }),
        }
    }

    /// Full structural check against the host graph.
    pub fn validate(&self, g: &Graph) -> Result<(), MDTreeError> {
        let span = self.span();
        if span != VertexSubset::full(g.n()) {
            return Err(MDTreeError::Coverage(span));
        }
        self.validate_node(g)
    }

    fn validate_node(&self, g: &Graph) -> Result<(), MDTreeError> {
        let span = self.span();
        let children = self.children();
        if let MDTree::Vertex(_) = self {
            return Ok(());
        }
        let spans: Vec<VertexSubset> = children.iter().map(MDTree::span).collect();
        let mut union = VertexSubset::empty();
        for s in &spans {
            if !union.intersection(s).is_empty() {
                return Err(MDTreeError::ChildrenOverlap(span));
            }
            union = union.union(s);
        }
        if union != span {
            return Err(MDTreeError::ChildrenOverlap(span));
        }
        let (h, map) = g.induced(&span).expect("span within host");
        let local = |s: &VertexSubset| -> VertexSubset {
            s.iter().map(|&v| map.binary_search(&v).expect("child within parent")).collect()
        };
        for s in &spans {
            if !is_module(&h, &local(s)) {
                return Err(MDTreeError::ChildNotModule(s.clone()));
            }
        }
        match self {
            MDTree::Parallel { .. } | MDTree::Series { .. } => {
                let host = if matches!(self, MDTree::Parallel { .. }) { h } else { h.complement() };
                let comps: Vec<VertexSubset> = host.components().iter().map(|c| c.mapped(&map)).collect();
                if comps.len() < 2 || comps != spans {
                    return Err(MDTreeError::WrongComponents(span));
                }
            }
            MDTree::Prime { quotient, reps, .. } => {
                if !h.is_connected() || !h.complement().is_connected() {
                    return Err(MDTreeError::WrongComponents(span));
                }
                if quotient.n() < 4 || reps.len() != children.len() {
                    return Err(MDTreeError::SmallQuotient(span));
                }
                if reps.iter().zip(&spans).any(|(r, s)| !s.contains(*r)) {
                    return Err(MDTreeError::BadRepresentative(span));
                }
                if g.induced(reps).expect("reps within host").0 != *quotient {
                    return Err(MDTreeError::QuotientMismatch(span));
                }
                if !is_prime(quotient) {
                    return Err(MDTreeError::QuotientNotPrime(span));
                }
            }
            MDTree::Vertex(_) => unreachable!(),
        }
        children.iter().try_for_each(|c| c.validate_node(g))
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MDTreeError {
    #[error("tree spans {0} instead of the whole vertex set")]
    Coverage(VertexSubset),
    #[error("children of {0} do not partition it")]
    ChildrenOverlap(VertexSubset),
    #[error("child {0} is not a module of its parent")]
    ChildNotModule(VertexSubset),
    #[error("children of {0} are not the (co-)components")]
    WrongComponents(VertexSubset),
    #[error("prime node {0} has fewer than four children")]
    SmallQuotient(VertexSubset),
    #[error("prime node {0} has a representative outside its child")]
    BadRepresentative(VertexSubset),
    #[error("quotient of {0} differs from the graph induced by its representatives")]
    QuotientMismatch(VertexSubset),
    #[error("quotient of {0} is not prime")]
    QuotientNotPrime(VertexSubset),
}

/// Modular decomposition tree of `g`.
///
/// # Panics
/// If `g` has no vertices.
pub fn md_tree(g: &Graph) -> MDTree {
    assert!(g.n() >= 1, "modular decomposition needs at least one vertex");
    fn build(g: &Graph, span: VertexSubset) -> MDTree {
        if span.len() == 1 {
            return MDTree::Vertex(span[0]);
        }
        let (h, map) = g.induced(&span).expect("span within host");
        let comps = h.components();
        if comps.len() > 1 {
            let children = comps.iter().map(|c| build(g, c.mapped(&map))).collect();
            return MDTree::Parallel { span, children };
        }
        let co = h.complement().components();
        if co.len() > 1 {
            let children = co.iter().map(|c| build(g, c.mapped(&map))).collect();
            return MDTree::Series { span, children };
        }
        let parts = maximal_modules(&h);
        let (quotient, reps) = quotient(&h, &parts).expect("maximal modules partition the graph");
        let reps = reps.iter().map(|&r| map[r]).collect();
        let children = parts.iter().map(|p| build(g, p.mapped(&map))).collect();
        MDTree::Prime { span, children, quotient, reps }
    }
    build(g, VertexSubset::full(g.n()))
}

#[derive(Debug, Error)]
pub enum ChiWError<E> {
    #[error("prime solver failed on node {span}: {source}")]
    Prime { span: VertexSubset, source: E },
    #[error("prime solver returned an invalid coloring on node {span}: {source}")]
    InvalidPrime { span: VertexSubset, source: ColoringError },
}

type Partial = BTreeMap<usize, Vec<usize>>;

/// Weighted chromatic number and an optimal multicoloring, composed over
/// the modular decomposition tree.
///
/// Parallel nodes reuse one palette (max); series nodes stack palettes
/// (sum); prime nodes solve the quotient with each child's weighted
/// chromatic number as its weight and map each child's own coloring into
/// the color set its quotient vertex received.
pub fn chi_w<E, F>(
    g: &Graph,
    tree: &MDTree,
    w: &VertexWeights,
    mut prime_solver: F,
) -> Result<(usize, MultiColoring), ChiWError<E>>
where
    F: FnMut(&VertexSubset, &Graph, &VertexWeights) -> Result<(usize, MultiColoring), E>,
{
    fn go<E, F>(t: &MDTree, w: &VertexWeights, solver: &mut F) -> Result<(usize, Partial), ChiWError<E>>
    where
        F: FnMut(&VertexSubset, &Graph, &VertexWeights) -> Result<(usize, MultiColoring), E>,
    {
        match t {
            MDTree::Vertex(v) => {
                let k = w.get(*v) as usize;
                Ok((k, BTreeMap::from([(*v, (0..k).collect())])))
            }
            MDTree::Parallel { children, .. } => {
                let mut k = 0;
                let mut out = Partial::new();
                for c in children {
                    let (kc, part) = go(c, w, solver)?;
                    k = k.max(kc);
                    out.extend(part);
                }
                Ok((k, out))
            }
            MDTree::Series { children, .. } => {
                let mut k = 0;
                let mut out = Partial::new();
                for c in children {
                    let (kc, part) = go(c, w, solver)?;
                    out.extend(part.into_iter().map(|(v, cs)| (v, cs.into_iter().map(|x| x + k).collect())));
                    k += kc;
                }
                Ok((k, out))
            }
            MDTree::Prime { span, children, quotient, .. } => {
                let solved: Vec<(usize, Partial)> = children.iter().map(|c| go(c, w, solver)).collect::<Result<_, _>>()?;
                let star = VertexWeights::new(solved.iter().map(|(k, _)| *k as u32).collect())
                    .expect("children have positive weighted chromatic number");
                let (k, qcol) = solver(span, quotient, &star).map_err(|source| ChiWError::Prime { span: span.clone(), source })?;
                qcol.validate(quotient, &star, k)
                    .map_err(|source| ChiWError::InvalidPrime { span: span.clone(), source })?;
                let mut out = Partial::new();
                for (i, (_, part)) in solved.into_iter().enumerate() {
                    let pool = qcol.colors(i);
                    out.extend(part.into_iter().map(|(v, cs)| (v, cs.into_iter().map(|x| pool[x]).collect())));
                }
                Ok((k, out))
            }
        }
    }
    let (k, partial) = go(tree, w, &mut prime_solver)?;
    let sets = (0..g.n()).map(|v| partial[&v].clone()).collect();
    Ok((k, MultiColoring::new(sets)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;
    use crate::oracle::{chi_w_exact, CutoffError, OracleLimits};

    fn exact(_: &VertexSubset, q: &Graph, w: &VertexWeights) -> Result<(usize, MultiColoring), CutoffError> {
        chi_w_exact(q, w, &OracleLimits::default())
    }

    #[test]
    fn module_examples() {
        assert!(is_module(&cycle(4), &[0, 2]));
        let p4 = path(4);
        for m in [vec![0, 1], vec![1, 2], vec![0, 2], vec![0, 3], vec![0, 1, 2], vec![1, 2, 3]] {
            assert!(!is_module(&p4, &m), "{m:?}");
        }
        assert!(is_module(&petersen(), &[7]));
        assert!(is_prime(&p4));
        assert!(!is_prime(&cycle(4)));
        assert!(is_prime(&cycle(5)));
    }

    #[test]
    fn md_tree_examples() {
        let t = md_tree(&cycle(4));
        assert_eq!(
            t,
            MDTree::Series {
                span: VertexSubset::full(4),
                children: vec![
                    MDTree::Parallel { span: VertexSubset::new([0, 2]), children: vec![MDTree::Vertex(0), MDTree::Vertex(2)] },
                    MDTree::Parallel { span: VertexSubset::new([1, 3]), children: vec![MDTree::Vertex(1), MDTree::Vertex(3)] },
                ],
            }
        );
        match md_tree(&path(4)) {
            MDTree::Prime { quotient, children, reps, .. } => {
                assert_eq!(quotient, path(4));
                assert_eq!(reps, vec![0, 1, 2, 3]);
                assert!(children.iter().all(|c| matches!(c, MDTree::Vertex(_))));
            }
            other => panic!("expected prime, got {other:?}"),
        }
        assert_eq!(
            md_tree(&edgeless(3)),
            MDTree::Parallel { span: VertexSubset::full(3), children: (0..3).map(MDTree::Vertex).collect() }
        );
        for g in [cycle(4), path(4), edgeless(3), cycle(5), petersen(), bowtie(), kp_minus_e(5)] {
            md_tree(&g).validate(&g).unwrap();
        }
    }

    #[test]
    fn prime_with_nontrivial_children() {
        // P4 with its ends blown up into an edge and a non-edge
        let g = Graph::from_edges(6, &[(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (3, 5)]).unwrap();
        let t = md_tree(&g);
        t.validate(&g).unwrap();
        match &t {
            MDTree::Prime { children, reps, .. } => {
                assert_eq!(children.len(), 4);
                assert_eq!(reps, &vec![0, 2, 3, 4]);
            }
            other => panic!("expected prime, got {other:?}"),
        }
    }

    #[test]
    fn quotient_examples() {
        let parts = vec![VertexSubset::new([0, 2]), VertexSubset::new([1, 3])];
        assert_eq!(quotient(&cycle(4), &parts).unwrap(), (complete(2), vec![0, 1]));
        let singles: Vec<_> = (0..5).map(|v| VertexSubset::new([v])).collect();
        assert_eq!(quotient(&cycle(5), &singles).unwrap().0, cycle(5));
        let bad = vec![VertexSubset::new([0, 1]), VertexSubset::new([2, 3])];
        assert!(matches!(quotient(&path(4), &bad), Err(ModularError::NotModule(_))));
        assert_eq!(quotient(&path(4), &[VertexSubset::new([0, 1])]), Err(ModularError::NotPartition));
    }

    #[test]
    fn weighted_composition() {
        let one = Graph::empty(1);
        let w = VertexWeights::new(vec![7]).unwrap();
        assert_eq!(chi_w(&one, &md_tree(&one), &w, exact).unwrap().0, 7);
        let k3 = complete(3);
        assert_eq!(chi_w(&k3, &md_tree(&k3), &VertexWeights::unit(3), exact).unwrap().0, 3);
        let c5 = cycle(5);
        let (k, col) = chi_w(&c5, &md_tree(&c5), &VertexWeights::unit(5), exact).unwrap();
        assert_eq!(k, 3);
        col.validate(&c5, &VertexWeights::unit(5), k).unwrap();
        let c4 = cycle(4);
        let w = VertexWeights::new(vec![2; 4]).unwrap();
        let (k, col) = chi_w(&c4, &md_tree(&c4), &w, exact).unwrap();
        assert_eq!(k, 4);
        col.validate(&c4, &w, k).unwrap();
    }

    #[test]
    fn invalid_prime_solution_detected() {
        let p4 = path(4);
        let r = chi_w(&p4, &md_tree(&p4), &VertexWeights::unit(4), |_, q: &Graph, _: &VertexWeights| -> Result<_, ()> {
            Ok((1, MultiColoring::from_single(&vec![0; q.n()])))
        });
        assert!(matches!(r, Err(ChiWError::InvalidPrime { .. })));
    }

    #[test]
    fn json_shape() {
        let v = md_tree(&path(4)).to_json();
        assert_eq!(v["kind"], "prime");
        assert_eq!(v["quotient_edges"].as_array().unwrap().len(), 3);
    }
}
