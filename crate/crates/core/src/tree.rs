//! Bicolored plane trees and their correspondence with rotation classes of
//! noncrossing partitions: yellow vertices carry the blocks of a partition,
//! white vertices the blocks of its Kreweras complement, and one edge per
//! element joins the two. Canonical codes erase the rooting and identify
//! trees up to rotation, or up to rotation and reflection.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::census::NC_SCAN_BUDGET;
use crate::partition::SetPartition;
use crate::symmetry::kreweras;
use crate::{enumerate_nc, Error, Result, MAX_GROUND_SET};

/// Parenthesis nesting accepted by the tree parser; keeps every recursive
/// walk over parsed trees within stack bounds.
const MAX_PARSE_DEPTH: usize = 1024;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Color {
    Yellow,
    White,
}

impl Color {
    pub fn opposite(self) -> Color {
        match self {
            Color::Yellow => Color::White,
            Color::White => Color::Yellow,
        }
    }

    fn letter(self) -> char {
        match self {
            Color::Yellow => 'Y',
            Color::White => 'W',
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Color::Yellow => "Y",
            Color::White => "W",
        })
    }
}

/// Equivalence group for canonical codes: plane rotations only, or plane
/// rotations together with reflection.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Chirality {
    RotationOnly,
    RotationAndReflection,
}

impl fmt::Display for Chirality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Chirality::RotationOnly => "rotation-only",
            Chirality::RotationAndReflection => "rotation-and-reflection",
        })
    }
}

/// Canonical string for a free bicolored plane tree under the declared
/// equivalence. Two trees are equivalent iff their codes are equal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TreeCode {
    code: String,
    chirality: Chirality,
}

impl TreeCode {
    pub fn code(&self) -> &str {
        &self.code
    }

    pub fn chirality(&self) -> Chirality {
        self.chirality
    }
}

impl fmt::Display for TreeCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.code)
    }
}

/// A rooted, properly 2-colored tree with ordered children. The rooting and
/// child order encode a plane embedding; [`canonical_code`] erases the
/// rooting.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BicoloredPlaneTree {
    color: Color,
    children: Vec<BicoloredPlaneTree>,
}

impl BicoloredPlaneTree {
    /// Joins children under a root; every child must carry the opposite
    /// color.
    pub fn new(color: Color, children: Vec<BicoloredPlaneTree>) -> Result<Self> {
        if children.iter().any(|c| c.color == color) {
            return Err(Error::ImproperColoring);
        }
        Ok(BicoloredPlaneTree { color, children })
    }

    pub fn leaf(color: Color) -> Self {
        BicoloredPlaneTree {
            color,
            children: Vec::new(),
        }
    }

    pub fn color(&self) -> Color {
        self.color
    }

    pub fn children(&self) -> &[BicoloredPlaneTree] {
        &self.children
    }

    pub fn edge_count(&self) -> usize {
        self.children
            .iter()
            .map(|c| c.edge_count() + 1)
            .sum()
    }

    /// The reflected plane tree: every child sequence reversed, recursively.
    pub fn mirrored(&self) -> Self {
        BicoloredPlaneTree {
            color: self.color,
            children: self.children.iter().rev().map(Self::mirrored).collect(),
        }
    }
}

impl fmt::Display for BicoloredPlaneTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.color)?;
        if !self.children.is_empty() {
            f.write_str("(")?;
            for (i, child) in self.children.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{child}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BicoloredPlaneTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BicoloredPlaneTree({self})")
    }
}

impl FromStr for BicoloredPlaneTree {
    type Err = Error;

    /// Grammar: a color letter (`Y` or `W`), optionally followed by a
    /// parenthesized, comma-separated list of subtrees, e.g. `W(Y(W),Y)`.
    fn from_str(s: &str) -> Result<Self> {
        let malformed = |msg: &str| Error::MalformedTree(msg.to_string());
        let mut stack: Vec<(Color, Vec<BicoloredPlaneTree>)> = Vec::new();
        let mut current: Option<BicoloredPlaneTree> = None;
        let mut after_letter = false;
        for c in s.chars() {
            match c {
                'Y' | 'W' => {
                    if current.is_some() {
                        return Err(malformed("a subtree must be followed by `,`, `(`, or `)`"));
                    }
                    let color = if c == 'Y' { Color::Yellow } else { Color::White };
                    current = Some(BicoloredPlaneTree::leaf(color));
                    after_letter = true;
                }
                '(' => {
                    if !after_letter {
                        return Err(malformed("`(` must follow a color letter"));
                    }
                    if stack.len() >= MAX_PARSE_DEPTH {
                        return Err(malformed("nesting deeper than 1024 levels"));
                    }
                    let node = current.take().expect("after_letter implies a current node");
                    stack.push((node.color, Vec::new()));
                    after_letter = false;
                }
                ',' => {
                    let finished = current
                        .take()
                        .ok_or_else(|| malformed("`,` must follow a subtree"))?;
                    let frame = stack
                        .last_mut()
                        .ok_or_else(|| malformed("`,` outside parentheses"))?;
                    frame.1.push(finished);
                    after_letter = false;
                }
                ')' => {
                    let finished = current
                        .take()
                        .ok_or_else(|| malformed("`)` must follow a subtree"))?;
                    let (color, mut children) =
                        stack.pop().ok_or_else(|| malformed("unmatched `)`"))?;
                    children.push(finished);
                    current = Some(BicoloredPlaneTree::new(color, children)?);
                    after_letter = false;
                }
                other => {
                    return Err(Error::MalformedTree(format!(
                        "illegal character `{other}`"
                    )))
                }
            }
        }
        if !stack.is_empty() {
            return Err(malformed("unclosed `(`"));
        }
        current.ok_or(Error::EmptyTree)
    }
}

/// Builds the tree of a noncrossing partition: yellow vertices are the
/// blocks, white vertices the Kreweras-complement blocks (on gap labels,
/// gap `i` following element `i`), and edge `i` joins element `i`'s yellow
/// block to gap `i`'s white block. The cyclic edge order at every vertex is
/// the circular label order; the result is rooted at the white vertex of
/// gap 1, children in ascending label order.
pub fn nc_to_tree(p: &SetPartition) -> Result<BicoloredPlaneTree> {
    if !p.is_noncrossing() {
        return Err(Error::NotNoncrossing);
    }
    let gaps = kreweras(p)?;
    let builder = TreeBuilder {
        yellow: p.blocks().collect(),
        white: gaps.blocks().collect(),
        yellow_of: p.owner_table(),
        white_of: gaps.owner_table(),
    };
    let root_block = &builder.white[builder.white_of[0] as usize];
    let children = root_block
        .iter()
        .map(|&label| builder.descend(Color::Yellow, label))
        .collect();
    let tree = BicoloredPlaneTree {
        color: Color::White,
        children,
    };
    debug_assert_eq!(tree.edge_count(), p.n());
    Ok(tree)
}

struct TreeBuilder {
    yellow: Vec<Vec<usize>>,
    white: Vec<Vec<usize>>,
    yellow_of: Vec<u8>,
    white_of: Vec<u8>,
}

impl TreeBuilder {
    /// Crosses edge `label` into its endpoint of the given color; the
    /// remaining block labels, cyclically after `label`, become children.
    fn descend(&self, color: Color, label: usize) -> BicoloredPlaneTree {
        let block = match color {
            Color::Yellow => &self.yellow[self.yellow_of[label - 1] as usize],
            Color::White => &self.white[self.white_of[label - 1] as usize],
        };
        let pos = block
            .iter()
            .position(|&e| e == label)
            .expect("every edge label lies in its block");
        let children = block[pos + 1..]
            .iter()
            .chain(&block[..pos])
            .map(|&next| self.descend(color.opposite(), next))
            .collect();
        BicoloredPlaneTree { color, children }
    }
}

/// Reads a noncrossing partition back off a tree: the boundary walk of the
/// plane tree labels each edge 1..n at its yellow-to-white traversal (an
/// edge down to a white child is labeled on descent, an edge back up from a
/// yellow child on ascent), and every yellow vertex's incident labels form
/// a block. The result represents the rotation class of the tree;
/// `nc_to_tree` maps it back to the same free plane tree.
pub fn tree_to_nc(t: &BicoloredPlaneTree) -> Result<SetPartition> {
    let n = t.edge_count();
    if n == 0 {
        return Err(Error::EmptyTree);
    }
    if n > MAX_GROUND_SET {
        return Err(Error::GroundSetTooLarge(n));
    }
    let mut masks = Vec::new();
    let mut next_label = 0u32;
    let root_mask = label_walk(t, &mut next_label, &mut masks);
    if t.color == Color::Yellow {
        masks.push(root_mask);
    }
    let partition = SetPartition::from_masks_unchecked(n, masks);
    debug_assert!(partition.is_noncrossing());
    Ok(partition)
}

/// Returns the mask of labels handed out to `v`'s child edges.
fn label_walk(v: &BicoloredPlaneTree, next_label: &mut u32, masks: &mut Vec<u64>) -> u64 {
    let mut mask = 0u64;
    for child in &v.children {
        if child.color == Color::White {
            // Descending into a white child is the edge's yellow-to-white
            // traversal: label now, then walk the subtree.
            let bit = 1u64 << *next_label;
            *next_label += 1;
            mask |= bit;
            label_walk(child, next_label, masks);
        } else {
            // A yellow child's edge crosses yellow-to-white on the way back
            // up: walk the subtree first, label on ascent.
            let child_mask = label_walk(child, next_label, masks);
            let bit = 1u64 << *next_label;
            *next_label += 1;
            mask |= bit;
            masks.push(child_mask | bit);
        }
    }
    mask
}

/// Flat view of a tree: vertex ids in preorder (so every parent id precedes
/// its children), each vertex's neighbors in cyclic plane order with the
/// parent first.
struct Arena {
    color: Vec<Color>,
    neigh: Vec<Vec<usize>>,
    parent: Vec<usize>,
}

const NO_PARENT: usize = usize::MAX;

fn arena_of(t: &BicoloredPlaneTree) -> Arena {
    let mut arena = Arena {
        color: vec![t.color],
        neigh: vec![Vec::new()],
        parent: vec![NO_PARENT],
    };
    let mut stack = vec![(t, 0usize)];
    while let Some((node, id)) = stack.pop() {
        let mut nb = Vec::with_capacity(node.children.len() + 1);
        if arena.parent[id] != NO_PARENT {
            nb.push(arena.parent[id]);
        }
        for child in &node.children {
            let child_id = arena.color.len();
            arena.color.push(child.color);
            arena.neigh.push(Vec::new());
            arena.parent.push(id);
            nb.push(child_id);
            stack.push((child, child_id));
        }
        arena.neigh[id] = nb;
    }
    arena
}

/// Reflects the embedding: each cyclic neighbor order is reversed.
fn mirrored_arena(a: &Arena) -> Arena {
    Arena {
        color: a.color.clone(),
        neigh: a
            .neigh
            .iter()
            .map(|nb| nb.iter().rev().copied().collect())
            .collect(),
        parent: a.parent.clone(),
    }
}

/// Vertices minimizing the largest component of the tree with the vertex
/// deleted; always one or two, and adjacent if two.
fn centroids(a: &Arena) -> Vec<usize> {
    let total = a.color.len();
    let mut size = vec![1usize; total];
    for v in (1..total).rev() {
        size[a.parent[v]] += size[v];
    }
    let mut best = usize::MAX;
    let mut arg = Vec::new();
    for v in 0..total {
        let mut worst = total - size[v];
        for &u in &a.neigh[v] {
            if u != a.parent[v] {
                worst = worst.max(size[u]);
            }
        }
        match worst.cmp(&best) {
            std::cmp::Ordering::Less => {
                best = worst;
                arg.clear();
                arg.push(v);
            }
            std::cmp::Ordering::Equal => arg.push(v),
            std::cmp::Ordering::Greater => {}
        }
    }
    debug_assert!(matches!(arg.len(), 1 | 2), "a tree has 1 or 2 centers");
    debug_assert!(arg.len() == 1 || a.parent[arg[1]] == arg[0]);
    arg
}

/// Appends the code of the subtree entered at `v` along the edge from
/// `from`: the remaining neighbors, cyclically after `from`, are the
/// children.
fn planted_code(a: &Arena, v: usize, from: usize, out: &mut String) {
    out.push(a.color[v].letter());
    let nb = &a.neigh[v];
    if nb.len() <= 1 {
        return;
    }
    let pos = nb
        .iter()
        .position(|&u| u == from)
        .expect("entered along an incident edge");
    out.push('(');
    let mut first = true;
    for &u in nb[pos + 1..].iter().chain(&nb[..pos]) {
        if !first {
            out.push(',');
        }
        first = false;
        planted_code(a, u, v, out);
    }
    out.push(')');
}

fn assemble<'a>(color: Color, kids: impl Iterator<Item = &'a String>) -> String {
    let mut s = String::new();
    s.push(color.letter());
    s.push('(');
    for (i, kid) in kids.enumerate() {
        if i > 0 {
            s.push(',');
        }
        s.push_str(kid);
    }
    s.push(')');
    s
}

/// Code of the tree rooted at the unique center `c`: the least candidate
/// over all cyclic rotations of `c`'s child codes.
fn single_center_code(a: &Arena, c: usize) -> String {
    let nb = &a.neigh[c];
    if nb.is_empty() {
        return a.color[c].letter().to_string();
    }
    let kid_codes: Vec<String> = nb
        .iter()
        .map(|&u| {
            let mut s = String::new();
            planted_code(a, u, c, &mut s);
            s
        })
        .collect();
    (0..kid_codes.len())
        .map(|r| {
            assemble(
                a.color[c],
                kid_codes[r..].iter().chain(&kid_codes[..r]),
            )
        })
        .min()
        .expect("a center with neighbors yields candidates")
}

/// Code of the tree rooted at center `c` with the adjacent center `first`
/// pinned as first child; pinning removes the cyclic freedom.
fn edge_rooted_code(a: &Arena, c: usize, first: usize) -> String {
    let nb = &a.neigh[c];
    let pos = nb
        .iter()
        .position(|&u| u == first)
        .expect("the two centers are adjacent");
    let kid_codes: Vec<String> = nb[pos..]
        .iter()
        .chain(&nb[..pos])
        .map(|&u| {
            let mut s = String::new();
            planted_code(a, u, c, &mut s);
            s
        })
        .collect();
    assemble(a.color[c], kid_codes.iter())
}

fn rotation_code(a: &Arena) -> String {
    match centroids(a).as_slice() {
        &[c] => single_center_code(a, c),
        &[c1, c2] => edge_rooted_code(a, c1, c2).min(edge_rooted_code(a, c2, c1)),
        _ => unreachable!("a tree has 1 or 2 centers"),
    }
}

/// Canonical code of the free plane tree underlying `t`. Codes are valid
/// rooted tree texts; equal codes characterize equivalence under the
/// declared group.
pub fn canonical_code(t: &BicoloredPlaneTree, chirality: Chirality) -> TreeCode {
    let a = arena_of(t);
    let code = match chirality {
        Chirality::RotationOnly => rotation_code(&a),
        Chirality::RotationAndReflection => {
            rotation_code(&a).min(rotation_code(&mirrored_arena(&a)))
        }
    };
    TreeCode { code, chirality }
}

/// The one or two centers, each as the child-index path from the root
/// (empty path = the root itself), in depth-first discovery order.
pub fn tree_center(t: &BicoloredPlaneTree) -> Vec<Vec<usize>> {
    let a = arena_of(t);
    centroids(&a)
        .into_iter()
        .map(|mut v| {
            let mut path = Vec::new();
            while a.parent[v] != NO_PARENT {
                let p = a.parent[v];
                let pos = a.neigh[p]
                    .iter()
                    .position(|&u| u == v)
                    .expect("a child is adjacent to its parent");
                path.push(if a.parent[p] == NO_PARENT { pos } else { pos - 1 });
                v = p;
            }
            path.reverse();
            path
        })
        .collect()
}

/// Counts degree-1 vertices by color: `(yellow_leaves, white_leaves)`. The
/// root is a leaf when it has exactly one child.
pub fn leaf_stats(t: &BicoloredPlaneTree) -> (usize, usize) {
    fn walk(v: &BicoloredPlaneTree, is_root: bool, out: &mut (usize, usize)) {
        let is_leaf = if is_root {
            v.children.len() == 1
        } else {
            v.children.is_empty()
        };
        if is_leaf {
            match v.color {
                Color::Yellow => out.0 += 1,
                Color::White => out.1 += 1,
            }
        }
        for child in &v.children {
            walk(child, false, out);
        }
    }
    let mut out = (0, 0);
    walk(t, true, &mut out);
    out
}

/// Canonical rotation-only codes of the trees of all noncrossing partitions
/// of `[n]`; one code per rotation class.
pub fn enumerate_tree_classes(n: usize) -> Result<BTreeSet<TreeCode>> {
    if n > NC_SCAN_BUDGET {
        return Err(Error::BudgetExceeded {
            what: "tree-class enumeration",
            n,
            budget: NC_SCAN_BUDGET,
        });
    }
    let mut codes = BTreeSet::new();
    for p in enumerate_nc(n)? {
        let tree = nc_to_tree(&p)?;
        codes.insert(canonical_code(&tree, Chirality::RotationOnly));
    }
    Ok(codes)
}
