//! Canonical rooted trees and forests.
//!
//! A rooted tree is represented by its multiset of child subtrees. Every tree
//! is reduced to a canonical form on construction — children are sorted by
//! their canonical bracket string — and interned in a global table, so two
//! values compare equal exactly when they are isomorphic as rooted trees.
//!
//! The text form is the bracket grammar `Tree := "[" Tree* "]"`, with `[]`
//! the single-vertex tree. Forests print as space-separated trees and the
//! empty forest prints as `1`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, LazyLock};

use dashmap::DashMap;
use num::bigint::BigUint;
use num::traits::{One, Zero};

use crate::combinat::{factorial, multiset_binomial};
use crate::error::{Error, Result};

/// Largest grade accepted by [`enumerate_trees`] (grade n lists trees with
/// n+1 vertices). T_14 = 87811 trees; beyond that the intern table and the
/// operator caches stop being desk-scale.
pub const MAX_TREE_GRADE: usize = 14;

/// Largest degree accepted by [`enumerate_forests`].
pub const MAX_FOREST_DEGREE: usize = 12;

struct TreeNode {
    children: Vec<RootedTree>,
    canon: Box<str>,
    size: u64,
    symmetry: BigUint,
}

/// An unlabeled rooted tree, canonical and interned.
///
/// Cloning is cheap (an `Arc` bump). Comparison, hashing and ordering all go
/// through the canonical bracket string, so the derived order is total and
/// stable across runs; it is the order used for children inside the
/// canonical form and for all deterministic listings.
#[derive(Clone)]
pub struct RootedTree(Arc<TreeNode>);

static INTERN: LazyLock<DashMap<Box<str>, RootedTree>> = LazyLock::new(DashMap::new);

impl RootedTree {
    /// The single-vertex tree.
    pub fn leaf() -> Self {
        Self::with_children(Vec::new())
    }

    /// Builds the canonical tree with the given child subtrees (any order).
    pub fn with_children(mut children: Vec<RootedTree>) -> Self {
        children.sort();
        let mut canon = String::with_capacity(2 + children.iter().map(|c| c.text().len()).sum::<usize>());
        canon.push('[');
        for c in &children {
            canon.push_str(c.text());
        }
        canon.push(']');
        if let Some(hit) = INTERN.get(canon.as_str()) {
            return hit.clone();
        }
        let size = 1 + children.iter().map(|c| c.size()).sum::<u64>();
        let symmetry = symmetry_of(&children);
        let canon: Box<str> = canon.into();
        let node = RootedTree(Arc::new(TreeNode {
            children,
            canon: canon.clone(),
            size,
            symmetry,
        }));
        INTERN.entry(canon).or_insert(node).clone()
    }

    /// Parses the bracket grammar `Tree := "[" Tree* "]"`; whitespace is
    /// allowed between siblings. Child order in the input is irrelevant.
    pub fn parse(text: &str) -> Result<Self> {
        let bytes = text.as_bytes();
        let mut pos = 0;
        skip_ws(bytes, &mut pos);
        let tree = parse_tree(bytes, &mut pos)?;
        skip_ws(bytes, &mut pos);
        if pos != bytes.len() {
            return Err(Error::Syntax {
                offset: pos,
                message: format!("trailing input after tree: {:?}", text[pos..].chars().next().unwrap()),
            });
        }
        Ok(tree)
    }

    /// The canonical bracket string. `parse(t.text()) == t` always holds.
    pub fn text(&self) -> &str {
        &self.0.canon
    }

    pub fn children(&self) -> &[RootedTree] {
        &self.0.children
    }

    /// Number of vertices, `|t|`.
    pub fn size(&self) -> u64 {
        self.0.size
    }

    /// Grade in the tree vector space: non-root vertex count, `|t| - 1`.
    pub fn grade(&self) -> u64 {
        self.0.size - 1
    }

    pub fn is_leaf(&self) -> bool {
        self.0.children.is_empty()
    }

    /// Order of the symmetry group of the tree: the product, over vertices,
    /// of the permutations of identical branches below that vertex.
    pub fn symmetry_order(&self) -> &BigUint {
        &self.0.symmetry
    }

    /// Number of labellings of the tree: bijections from the vertices to
    /// {0, .., |t|-1} that increase away from the root. Computed by the
    /// hook-length formula |t|! / prod over vertices of subtree sizes.
    pub fn labelling_count(&self) -> BigUint {
        let numer = factorial(self.size());
        let denom = self.subtree_size_product();
        let (q, r) = num::Integer::div_rem(&numer, &denom);
        debug_assert!(r.is_zero());
        q
    }

    /// The Connes-Moscovici weight: labellings counted modulo tree symmetry,
    /// i.e. `labelling_count / symmetry_order`. The division is always exact;
    /// an inexact division would mean the canonical form itself is broken,
    /// so that case panics.
    pub fn cm_weight(&self) -> BigUint {
        let (q, r) = num::Integer::div_rem(&self.labelling_count(), self.symmetry_order());
        assert!(
            r.is_zero(),
            "internal consistency: |SG(t)| must divide the labelling count (t = {self})"
        );
        q
    }

    fn subtree_size_product(&self) -> BigUint {
        let mut acc = BigUint::from(self.size());
        for c in self.children() {
            acc *= c.subtree_size_product();
        }
        acc
    }

    /// Subtree handles in canonical preorder: index 0 is the whole tree,
    /// followed by each child subtree in canonical order, recursively.
    /// This indexing identifies vertices for grafting and for cut edges
    /// (a non-root vertex names the edge from its parent).
    pub fn preorder(&self) -> Vec<RootedTree> {
        let mut out = Vec::with_capacity(self.size() as usize);
        fn walk(t: &RootedTree, out: &mut Vec<RootedTree>) {
            out.push(t.clone());
            for c in t.children() {
                walk(c, out);
            }
        }
        walk(self, &mut out);
        out
    }

    /// Rebuilds the tree with extra child branches attached at the given
    /// preorder vertex indices.
    pub fn with_grafts(&self, extra: &BTreeMap<usize, Vec<RootedTree>>) -> RootedTree {
        fn walk(t: &RootedTree, counter: &mut usize, extra: &BTreeMap<usize, Vec<RootedTree>>) -> RootedTree {
            let my_index = *counter;
            *counter += 1;
            let mut children: Vec<RootedTree> =
                t.children().iter().map(|c| walk(c, counter, extra)).collect();
            if let Some(branches) = extra.get(&my_index) {
                children.extend(branches.iter().cloned());
            }
            RootedTree::with_children(children)
        }
        let mut counter = 0;
        walk(self, &mut counter, extra)
    }

    /// Attaches `branch` as a new child of the vertex with the given
    /// preorder index.
    pub fn graft_at(&self, vertex: usize, branch: &RootedTree) -> RootedTree {
        let mut extra = BTreeMap::new();
        extra.insert(vertex, vec![branch.clone()]);
        self.with_grafts(&extra)
    }

    /// Parent preorder index of every vertex; the root maps to itself.
    pub fn parent_vector(&self) -> Vec<usize> {
        let mut parents = vec![0; self.size() as usize];
        fn walk(t: &RootedTree, my_index: usize, counter: &mut usize, parents: &mut Vec<usize>) {
            for c in t.children() {
                let child_index = *counter;
                *counter += 1;
                parents[child_index] = my_index;
                walk(c, child_index, counter, parents);
            }
        }
        let mut counter = 1;
        walk(self, 0, &mut counter, &mut parents);
        parents
    }

    /// JSON form: a tree is the array of its children's JSON forms.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(self.children().iter().map(|c| c.to_json()).collect())
    }
}

fn symmetry_of(children: &[RootedTree]) -> BigUint {
    let mut acc = BigUint::one();
    let mut i = 0;
    while i < children.len() {
        let mut j = i + 1;
        while j < children.len() && children[j] == children[i] {
            j += 1;
        }
        let mult = (j - i) as u64;
        acc *= factorial(mult);
        acc *= children[i].symmetry_order().pow(mult as u32);
        i = j;
    }
    acc
}

fn skip_ws(bytes: &[u8], pos: &mut usize) {
    while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
        *pos += 1;
    }
}

fn parse_tree(bytes: &[u8], pos: &mut usize) -> Result<RootedTree> {
    if *pos >= bytes.len() {
        return Err(Error::Syntax {
            offset: *pos,
            message: "expected '[', found end of input".into(),
        });
    }
    if bytes[*pos] != b'[' {
        return Err(Error::Syntax {
            offset: *pos,
            message: format!("expected '[', found {:?}", bytes[*pos] as char),
        });
    }
    *pos += 1;
    let mut children = Vec::new();
    loop {
        skip_ws(bytes, pos);
        match bytes.get(*pos) {
            Some(b']') => {
                *pos += 1;
                return Ok(RootedTree::with_children(children));
            }
            Some(b'[') => children.push(parse_tree(bytes, pos)?),
            Some(&c) => {
                return Err(Error::Syntax {
                    offset: *pos,
                    message: format!("expected '[' or ']', found {:?}", c as char),
                })
            }
            None => {
                return Err(Error::Syntax {
                    offset: *pos,
                    message: "unbalanced brackets: unexpected end of input".into(),
                })
            }
        }
    }
}

impl PartialEq for RootedTree {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.canon == other.0.canon
    }
}
impl Eq for RootedTree {}

impl PartialOrd for RootedTree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RootedTree {
    fn cmp(&self, other: &Self) -> Ordering {
        if Arc::ptr_eq(&self.0, &other.0) {
            Ordering::Equal
        } else {
            self.0.canon.cmp(&other.0.canon)
        }
    }
}

impl Hash for RootedTree {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.canon.hash(state);
    }
}

impl fmt::Display for RootedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.text())
    }
}

impl fmt::Debug for RootedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.text())
    }
}

/// A multiset of rooted trees, kept sorted; a monomial of the forest algebra.
/// The empty forest is the unit and prints as `1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Forest {
    trees: Vec<RootedTree>,
    degree: u64,
}

impl Forest {
    pub fn empty() -> Self {
        Forest { trees: Vec::new(), degree: 0 }
    }

    pub fn single(tree: RootedTree) -> Self {
        let degree = tree.size();
        Forest { trees: vec![tree], degree }
    }

    pub fn from_trees(mut trees: Vec<RootedTree>) -> Self {
        trees.sort();
        let degree = trees.iter().map(|t| t.size()).sum();
        Forest { trees, degree }
    }

    pub fn trees(&self) -> &[RootedTree] {
        &self.trees
    }

    /// Total vertex count; the grading of the forest algebra.
    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn is_empty(&self) -> bool {
        self.trees.is_empty()
    }

    /// Monomial product: multiset union.
    pub fn mul(&self, other: &Forest) -> Forest {
        let mut trees = Vec::with_capacity(self.trees.len() + other.trees.len());
        trees.extend(self.trees.iter().cloned());
        trees.extend(other.trees.iter().cloned());
        Forest::from_trees(trees)
    }

    /// The forest with one extra tree factor.
    pub fn push(&self, tree: RootedTree) -> Forest {
        let mut trees = self.trees.clone();
        let at = trees.partition_point(|t| *t <= tree);
        trees.insert(at, tree);
        Forest { degree: self.degree + trees[at].size(), trees }
    }

    /// The forest with the factor at `index` removed.
    pub fn without_index(&self, index: usize) -> Forest {
        let mut trees = self.trees.clone();
        let removed = trees.remove(index);
        Forest { trees, degree: self.degree - removed.size() }
    }

    /// Multiplicity of `tree` as a factor.
    pub fn count_of(&self, tree: &RootedTree) -> usize {
        self.trees.iter().filter(|t| *t == tree).count()
    }

    /// Parses a space-separated list of trees; `1` is the empty forest.
    pub fn parse(text: &str) -> Result<Self> {
        let bytes = text.as_bytes();
        let mut pos = 0;
        skip_ws(bytes, &mut pos);
        if bytes.get(pos) == Some(&b'1') {
            pos += 1;
            skip_ws(bytes, &mut pos);
            if pos != bytes.len() {
                return Err(Error::Syntax {
                    offset: pos,
                    message: "trailing input after the empty forest \"1\"".into(),
                });
            }
            return Ok(Forest::empty());
        }
        let mut trees = Vec::new();
        while pos < bytes.len() {
            trees.push(parse_tree(bytes, &mut pos)?);
            skip_ws(bytes, &mut pos);
        }
        if trees.is_empty() {
            return Err(Error::Syntax {
                offset: 0,
                message: "empty input; expected a forest (\"1\" or trees)".into(),
            });
        }
        Ok(Forest::from_trees(trees))
    }

    /// JSON form: array of tree JSON forms.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(self.trees.iter().map(|t| t.to_json()).collect())
    }
}

impl PartialOrd for Forest {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Graded order: by degree, then lexicographically on the sorted tree list.
impl Ord for Forest {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| self.trees.cmp(&other.trees))
    }
}

impl fmt::Display for Forest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.trees.is_empty() {
            return f.write_str("1");
        }
        for (i, t) in self.trees.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Forest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

static TREES_BY_SIZE: LazyLock<DashMap<usize, Arc<Vec<RootedTree>>>> = LazyLock::new(DashMap::new);

/// All trees with exactly `n` vertices (n >= 1), sorted, cached.
fn trees_of_size(n: usize) -> Arc<Vec<RootedTree>> {
    if let Some(hit) = TREES_BY_SIZE.get(&n) {
        return hit.clone();
    }
    let trees: Vec<RootedTree> = if n == 1 {
        vec![RootedTree::leaf()]
    } else {
        forests_of_degree(n - 1)
            .iter()
            .map(|f| RootedTree::with_children(f.trees().to_vec()))
            .collect()
    };
    let mut trees = trees;
    trees.sort();
    trees.dedup();
    let arc = Arc::new(trees);
    TREES_BY_SIZE.entry(n).or_insert(arc).clone()
}

static FORESTS_BY_DEGREE: LazyLock<DashMap<usize, Arc<Vec<Forest>>>> = LazyLock::new(DashMap::new);

/// All forests of total degree `d`, sorted, cached.
fn forests_of_degree(d: usize) -> Arc<Vec<Forest>> {
    if let Some(hit) = FORESTS_BY_DEGREE.get(&d) {
        return hit.clone();
    }
    // catalog of all trees with at most d vertices, largest sizes first so
    // the multiset recursion can cut off early
    let mut catalog: Vec<RootedTree> = Vec::new();
    for size in 1..=d {
        catalog.extend(trees_of_size(size).iter().cloned());
    }
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(
        remaining: usize,
        max_index: usize,
        catalog: &[RootedTree],
        current: &mut Vec<RootedTree>,
        out: &mut Vec<Forest>,
    ) {
        if remaining == 0 {
            out.push(Forest::from_trees(current.clone()));
            return;
        }
        for i in 0..max_index {
            let size = catalog[i].size() as usize;
            if size <= remaining {
                current.push(catalog[i].clone());
                rec(remaining - size, i + 1, catalog, current, out);
                current.pop();
            }
        }
    }
    rec(d, catalog.len(), &catalog, &mut current, &mut out);
    out.sort();
    let arc = Arc::new(out);
    FORESTS_BY_DEGREE.entry(d).or_insert(arc).clone()
}

/// All trees of grade `n` (n+1 vertices), each exactly once, in canonical
/// order. Errors above [`MAX_TREE_GRADE`].
pub fn enumerate_trees(grade: usize) -> Result<Vec<RootedTree>> {
    if grade > MAX_TREE_GRADE {
        return Err(Error::ResourceLimit {
            what: "tree grade",
            requested: grade,
            max: MAX_TREE_GRADE,
        });
    }
    Ok(trees_of_size(grade + 1).as_ref().clone())
}

/// All forests of total degree `d`, each exactly once, in canonical order.
/// Errors above [`MAX_FOREST_DEGREE`].
pub fn enumerate_forests(degree: usize) -> Result<Vec<Forest>> {
    if degree > MAX_FOREST_DEGREE {
        return Err(Error::ResourceLimit {
            what: "forest degree",
            requested: degree,
            max: MAX_FOREST_DEGREE,
        });
    }
    Ok(forests_of_degree(degree).as_ref().clone())
}

/// Tree counts T_0, .., T_max from the Euler-product recursion
/// `sum T_n x^n = prod (1 - x^n)^{-T_{n-1}}`, expanded directly.
/// Independent of the enumeration path.
pub fn tree_count_series(max: usize) -> Vec<BigUint> {
    let mut series = vec![BigUint::zero(); max + 1];
    series[0] = BigUint::one();
    for n in 1..=max {
        // by now coefficients below x^n are final; factor (1-x^n)^{-T_{n-1}}
        let exponent = series[n - 1].clone();
        let old = series.clone();
        for j in n..=max {
            let mut k = 1u64;
            while n * (k as usize) <= j {
                let add = multiset_binomial(&exponent, k) * &old[j - n * k as usize];
                series[j] += add;
                k += 1;
            }
        }
    }
    series
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> RootedTree {
        RootedTree::parse(s).unwrap()
    }

    #[test]
    fn parse_basics() {
        assert_eq!(t("[]").size(), 1);
        assert_eq!(t("[]").text(), "[]");
        assert!(t("[]").is_leaf());
        // child order is irrelevant
        assert_eq!(t("[[][[]]]"), t("[[[]][]]"));
        // whitespace between siblings
        assert_eq!(t("[ [] [ [] ] ]"), t("[[][[]]]"));
        assert_eq!(t("[[[]]]").text(), "[[[]]]");
    }

    #[test]
    fn parse_errors_carry_offsets() {
        match RootedTree::parse("[[]") {
            Err(Error::Syntax { offset, .. }) => assert_eq!(offset, 3),
            other => panic!("expected syntax error, got {other:?}"),
        }
        match RootedTree::parse("[]x") {
            Err(Error::Syntax { offset, .. }) => assert_eq!(offset, 2),
            other => panic!("expected syntax error, got {other:?}"),
        }
        match RootedTree::parse("[a]") {
            Err(Error::Syntax { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("expected syntax error, got {other:?}"),
        }
        assert!(Forest::parse("").is_err());
        assert!(Forest::parse("1 []").is_err());
    }

    #[test]
    fn canonical_text_is_stable() {
        // the canonical alternative for a root with children {leaf, edge}
        assert_eq!(t("[[][[]]]").text(), "[[[]][]]");
        assert_eq!(t("[[[]][]]").text(), "[[[]][]]");
        // round trip
        for s in ["[]", "[[]]", "[[][]]", "[[[]][]]", "[[[[]]][[][]]]"] {
            let tr = t(s);
            assert_eq!(RootedTree::parse(tr.text()).unwrap(), tr);
        }
    }

    #[test]
    fn sizes_and_symmetry() {
        assert_eq!(t("[[][]]").size(), 3);
        assert_eq!(*t("[]").symmetry_order(), BigUint::one());
        assert_eq!(*t("[[][]]").symmetry_order(), BigUint::from(2u32)); // cherry
        assert_eq!(*t("[[][][]]").symmetry_order(), BigUint::from(6u32)); // 3-star
        assert_eq!(*t("[[[]]]").symmetry_order(), BigUint::one()); // chain
        // nested: two identical cherry branches give 2! * 2 * 2 = 8
        assert_eq!(*t("[[[][]][[][]]]").symmetry_order(), BigUint::from(8u32));
    }

    #[test]
    fn labelling_counts() {
        assert_eq!(t("[[[]]]").labelling_count(), BigUint::one()); // chain of 3
        assert_eq!(t("[[][]]").labelling_count(), BigUint::from(2u32)); // cherry
        assert_eq!(t("[[][][]]").labelling_count(), BigUint::from(6u32)); // 3-star
        // total over |t| = 4 is 12
        let total: BigUint = enumerate_trees(3)
            .unwrap()
            .iter()
            .map(|t| t.labelling_count())
            .sum();
        assert_eq!(total, BigUint::from(12u32));
    }

    #[test]
    fn cm_weights() {
        assert_eq!(t("[[][]]").cm_weight(), BigUint::one()); // 2 / 2
        assert_eq!(t("[[[]]]").cm_weight(), BigUint::one());
        // sum over |t| = 5 is 4! = 24
        let total: BigUint = enumerate_trees(4).unwrap().iter().map(|t| t.cm_weight()).sum();
        assert_eq!(total, BigUint::from(24u32));
    }

    #[test]
    fn enumeration_counts_match_series() {
        let series = tree_count_series(8);
        let expect: Vec<u64> = vec![1, 1, 2, 4, 9, 20, 48, 115, 286];
        for (n, e) in expect.iter().enumerate() {
            assert_eq!(series[n], BigUint::from(*e), "series at {n}");
            assert_eq!(enumerate_trees(n).unwrap().len() as u64, *e, "trees at {n}");
            assert_eq!(enumerate_forests(n).unwrap().len() as u64, *e, "forests at {n}");
        }
    }

    #[test]
    fn enumeration_small_cases() {
        assert_eq!(enumerate_trees(0).unwrap(), vec![t("[]")]);
        let t3 = enumerate_trees(3).unwrap();
        assert_eq!(t3.len(), 4);
        assert!(t3.contains(&t("[[[[]]]]"))); // chain of 4
        assert!(t3.contains(&t("[[[][]]]")));
        assert!(t3.contains(&t("[[[]][]]")));
        assert!(t3.contains(&t("[[][][]]"))); // 3-star
        let f0 = enumerate_forests(0).unwrap();
        assert_eq!(f0, vec![Forest::empty()]);
        let f3 = enumerate_forests(3).unwrap();
        let shown: Vec<String> = f3.iter().map(|f| f.to_string()).collect();
        assert_eq!(f3.len(), 4);
        assert!(shown.contains(&"[] [] []".to_string()));
        assert!(shown.contains(&"[[]] []".to_string()));
        assert!(shown.contains(&"[[[]]]".to_string()));
        assert!(shown.contains(&"[[][]]".to_string()));
    }

    #[test]
    fn enumeration_limits() {
        assert!(matches!(
            enumerate_trees(MAX_TREE_GRADE + 1),
            Err(Error::ResourceLimit { .. })
        ));
        assert!(matches!(
            enumerate_forests(MAX_FOREST_DEGREE + 1),
            Err(Error::ResourceLimit { .. })
        ));
    }

    #[test]
    fn forest_basics() {
        let f = Forest::parse("[[]] [] [[]]").unwrap();
        assert_eq!(f.degree(), 5);
        assert_eq!(f.count_of(&t("[[]]")), 2);
        assert_eq!(Forest::parse("1").unwrap(), Forest::empty());
        assert_eq!(Forest::empty().to_string(), "1");
        let g = f.without_index(0);
        assert_eq!(g.degree() + f.trees()[0].size(), f.degree());
        let h = Forest::empty().push(t("[]"));
        assert_eq!(h, Forest::single(t("[]")));
    }

    #[test]
    fn grafting() {
        let edge = t("[[]]");
        // preorder index 0 = root, 1 = the leaf below it
        assert_eq!(edge.graft_at(0, &t("[]")), t("[[][]]"));
        assert_eq!(edge.graft_at(1, &t("[]")), t("[[[]]]"));
        let mut extra = BTreeMap::new();
        extra.insert(0, vec![t("[]")]);
        extra.insert(1, vec![t("[]")]);
        assert_eq!(edge.with_grafts(&extra), t("[[[]][]]"));
    }

    #[test]
    fn parent_vectors_follow_preorder() {
        let tree = t("[[[]][]]");
        // preorder: 0 = root, 1 = edge child, 2 = its leaf, 3 = leaf child
        assert_eq!(tree.parent_vector(), vec![0, 0, 1, 0]);
        let pre = tree.preorder();
        assert_eq!(pre.len(), 4);
        assert_eq!(pre[0], tree);
        assert_eq!(pre[1], t("[[]]"));
    }

    #[test]
    fn json_forms() {
        assert_eq!(t("[]").to_json().to_string(), "[]");
        assert_eq!(t("[[][]]").to_json().to_string(), "[[],[]]");
        assert_eq!(Forest::parse("[] []").unwrap().to_json().to_string(), "[[],[]]");
    }

    #[test]
    fn concurrent_interning() {
        let handles: Vec<_> = (0..8)
            .map(|i| {
                std::thread::spawn(move || {
                    let mut chain = RootedTree::leaf();
                    for _ in 0..(i % 4) + 3 {
                        chain = RootedTree::with_children(vec![chain]);
                    }
                    enumerate_trees(6).unwrap().len()
                })
            })
            .collect();
        for h in handles {
            assert_eq!(h.join().unwrap(), 48);
        }
    }
}
