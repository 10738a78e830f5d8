//! Permutations on a finite domain `{0, .., n-1}` and the groups they generate.
//!
//! Groups here are small (at most 120 elements for the polyhedra in this
//! crate), so a [`PermGroup`] always carries its complete element list.
//! Subgroups such as stabilizers are computed by filtering that list.
//!
//! # Conventions
//!
//! * Composition applies the right operand first: `p.compose(&q)` maps `i`
//!   to `p(q(i))`.
//! * Indices are 0-based in the API. The cycle notation produced by
//!   [`Permutation`]'s `Display` impl and read by [`Permutation::parse_cycles`]
//!   is 1-based, e.g. `(1 2)(3 4)`, with `e` for the identity.
//!
//! # Stabilizers of the octahedron
//!
//! The stabilizer of a single octahedron vertex inside the full rotation
//! group (order 24) has order 4: the quarter turns about that vertex's axis.
//! The two-element group `{e, (1 2)(3 4)}` that is often quoted for the
//! stabilizer of the right/left vertices is the stabilizer inside the
//! subgroup generated by the half turn about the right-left axis only.
//! Functions in this module always return the true stabilizer of whatever
//! group they are handed.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

/// A bijection on `{0, .., n-1}`, stored as its image list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(domain_size: usize) -> Self {
        Permutation {
            images: (0..domain_size).collect(),
        }
    }

    /// Builds a permutation from its image list; slot `i` holds the image of `i`.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &image in &images {
            if image >= n || seen[image] {
                return Err(Error::NotABijection { domain_size: n });
            }
            seen[image] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation from disjoint cycles of 0-based indices.
    ///
    /// Each cycle maps an entry to its successor and the last entry back to
    /// the first. Unlisted indices are fixed.
    pub fn from_cycles<C: AsRef<[usize]>>(cycles: &[C], domain_size: usize) -> Result<Self> {
        let mut images: Vec<usize> = (0..domain_size).collect();
        let mut used = vec![false; domain_size];
        for cycle in cycles {
            let cycle = cycle.as_ref();
            for &index in cycle {
                if index >= domain_size {
                    return Err(Error::OutOfRange { index, domain_size });
                }
                if used[index] {
                    return Err(Error::MalformedCycles { index });
                }
                used[index] = true;
            }
            for (k, &from) in cycle.iter().enumerate() {
                images[from] = cycle[(k + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    /// Parses 1-based cycle notation such as `(1 2)(3 4)` or `e`.
    pub fn parse_cycles(text: &str, domain_size: usize) -> Result<Self> {
        let trimmed = text.trim();
        if trimmed == "e" {
            return Ok(Self::identity(domain_size));
        }
        let syntax = |offset: usize, message: &str| Error::CycleSyntax {
            offset,
            message: message.to_string(),
        };

        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut current: Option<Vec<usize>> = None;
        let bytes = text.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            let c = bytes[i];
            match c {
                b'(' => {
                    if current.is_some() {
                        return Err(syntax(i, "nested `(`"));
                    }
                    current = Some(Vec::new());
                    i += 1;
                }
                b')' => match current.take() {
                    Some(cycle) if !cycle.is_empty() => {
                        cycles.push(cycle);
                        i += 1;
                    }
                    Some(_) => return Err(syntax(i, "empty cycle")),
                    None => return Err(syntax(i, "unmatched `)`")),
                },
                b'0'..=b'9' => {
                    let start = i;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    let cycle = current
                        .as_mut()
                        .ok_or_else(|| syntax(start, "number outside of a cycle"))?;
                    let value: usize = text[start..i]
                        .parse()
                        .map_err(|_| syntax(start, "number too large"))?;
                    if value == 0 {
                        return Err(syntax(start, "indices are 1-based"));
                    }
                    cycle.push(value - 1);
                }
                c if c.is_ascii_whitespace() => i += 1,
                _ => return Err(syntax(i, "unexpected character")),
            }
        }
        if current.is_some() {
            return Err(syntax(bytes.len(), "unterminated cycle"));
        }
        if cycles.is_empty() {
            return Err(syntax(0, "expected `e` or at least one cycle"));
        }
        Self::from_cycles(&cycles, domain_size)
    }

    pub fn domain_size(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Image of `point`. Panics if `point` is outside the domain.
    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    pub fn try_apply(&self, point: usize) -> Result<usize> {
        self.images.get(point).copied().ok_or(Error::OutOfRange {
            index: point,
            domain_size: self.domain_size(),
        })
    }

    /// `self ∘ other`: applies `other` first, then `self`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.domain_size() != other.domain_size() {
            return Err(Error::DomainMismatch {
                left: self.domain_size(),
                right: other.domain_size(),
            });
        }
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &image) in self.images.iter().enumerate() {
            images[image] = i;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &image)| i == image)
    }

    pub fn is_involution(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &image)| self.images[image] == i)
    }

    pub fn fixed_points(&self) -> BTreeSet<usize> {
        self.images
            .iter()
            .enumerate()
            .filter(|(i, image)| i == *image)
            .map(|(i, _)| i)
            .collect()
    }

    /// Non-trivial cycles, each starting at its smallest element, ordered by
    /// that element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.images.len()];
        let mut cycles = Vec::new();
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut next = self.images[start];
            while next != start {
                seen[next] = true;
                cycle.push(next);
                next = self.images[next];
            }
            if cycle.len() > 1 {
                cycles.push(cycle);
            }
        }
        cycles
    }

    /// Order of the permutation as a group element.
    pub fn order(&self) -> usize {
        fn gcd(a: usize, b: usize) -> usize {
            if b == 0 {
                a
            } else {
                gcd(b, a % b)
            }
        }
        self.cycles()
            .iter()
            .fold(1, |acc, c| acc / gcd(acc, c.len()) * c.len())
    }

    /// Image of a set of points.
    pub fn image_of_set(&self, set: &BTreeSet<usize>) -> BTreeSet<usize> {
        set.iter().map(|&v| self.images[v]).collect()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("e");
        }
        for cycle in cycles {
            f.write_str("(")?;
            for (k, v) in cycle.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", v + 1)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// A finite permutation group with its complete element list.
#[derive(Debug, Clone)]
pub struct PermGroup {
    domain_size: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    members: HashSet<Permutation>,
}

impl PermGroup {
    /// Smallest group containing every generator.
    ///
    /// Elements are listed identity first, then in breadth-first order of
    /// word length in the generators.
    pub fn closure(generators: &[Permutation]) -> Result<PermGroup> {
        let first = generators.first().ok_or(Error::EmptyGenerators)?;
        let n = first.domain_size();
        if let Some(bad) = generators.iter().find(|g| g.domain_size() != n) {
            return Err(Error::DomainMismatch {
                left: n,
                right: bad.domain_size(),
            });
        }

        let identity = Permutation::identity(n);
        let mut members = HashSet::from([identity.clone()]);
        let mut elements = vec![identity.clone()];
        let mut queue = VecDeque::from([identity]);
        while let Some(x) = queue.pop_front() {
            for g in generators {
                let y = g.compose_unchecked(&x);
                if members.insert(y.clone()) {
                    elements.push(y.clone());
                    queue.push_back(y);
                }
            }
        }
        Ok(PermGroup {
            domain_size: n,
            generators: generators.to_vec(),
            elements,
            members,
        })
    }

    /// The trivial group on `domain_size` points.
    pub fn trivial(domain_size: usize) -> PermGroup {
        Self::closure(&[Permutation::identity(domain_size)]).expect("identity generates")
    }

    /// Wraps a list already known to be closed, picking a small generating set.
    fn from_closed_elements(domain_size: usize, elements: Vec<Permutation>) -> PermGroup {
        let mut generators: Vec<Permutation> = Vec::new();
        let mut span: HashSet<Permutation> = HashSet::from([Permutation::identity(domain_size)]);
        for element in &elements {
            if span.contains(element) {
                continue;
            }
            generators.push(element.clone());
            span = Self::closure(&generators).expect("nonempty").members;
        }
        if generators.is_empty() {
            generators.push(Permutation::identity(domain_size));
        }
        let members = elements.iter().cloned().collect();
        PermGroup {
            domain_size,
            generators,
            elements,
            members,
        }
    }

    pub fn domain_size(&self) -> usize {
        self.domain_size
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.members.contains(p)
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.elements.iter().all(|e| other.contains(e))
    }

    fn check_point(&self, point: usize) -> Result<()> {
        if point < self.domain_size {
            Ok(())
        } else {
            Err(Error::OutOfRange {
                index: point,
                domain_size: self.domain_size,
            })
        }
    }

    /// `{ h(point) : h ∈ G }`.
    pub fn orbit(&self, point: usize) -> Result<BTreeSet<usize>> {
        self.check_point(point)?;
        Ok(self.elements.iter().map(|h| h.apply(point)).collect())
    }

    pub fn orbit_partition(&self) -> OrbitPartition {
        let mut assigned = vec![false; self.domain_size];
        let mut blocks = Vec::new();
        for v in 0..self.domain_size {
            if assigned[v] {
                continue;
            }
            let block: BTreeSet<usize> = self.elements.iter().map(|h| h.apply(v)).collect();
            for &u in &block {
                assigned[u] = true;
            }
            blocks.push(block);
        }
        OrbitPartition { blocks }
    }

    fn subgroup_where(&self, keep: impl Fn(&Permutation) -> bool) -> PermGroup {
        let elements = self.elements.iter().filter(|h| keep(h)).cloned().collect();
        Self::from_closed_elements(self.domain_size, elements)
    }

    /// `{ h ∈ G : h(point) = point }`.
    pub fn point_stabilizer(&self, point: usize) -> Result<PermGroup> {
        self.check_point(point)?;
        Ok(self.subgroup_where(|h| h.apply(point) == point))
    }

    /// Subgroup fixing every member of `fixed` individually.
    pub fn pointwise_set_stabilizer<I>(&self, fixed: I) -> Result<PermGroup>
    where
        I: IntoIterator<Item = usize>,
    {
        let fixed: Vec<usize> = fixed.into_iter().collect();
        for &v in &fixed {
            self.check_point(v)?;
        }
        Ok(self.subgroup_where(|h| fixed.iter().all(|&v| h.apply(v) == v)))
    }

    /// Subgroup mapping `set` onto itself.
    pub fn setwise_stabilizer<I>(&self, set: I) -> Result<PermGroup>
    where
        I: IntoIterator<Item = usize>,
    {
        let set: BTreeSet<usize> = set.into_iter().collect();
        for &v in &set {
            self.check_point(v)?;
        }
        Ok(self.subgroup_where(|h| h.image_of_set(&set) == set))
    }

    /// Non-identity elements, in element order.
    pub fn non_identity(&self) -> impl Iterator<Item = &Permutation> {
        self.elements.iter().filter(|p| !p.is_identity())
    }
}

/// The orbits of a group, as disjoint blocks covering the domain.
///
/// Blocks are ordered by their smallest element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitPartition {
    blocks: Vec<BTreeSet<usize>>,
}

impl OrbitPartition {
    pub fn blocks(&self) -> &[BTreeSet<usize>] {
        &self.blocks
    }

    pub fn block_of(&self, point: usize) -> Option<&BTreeSet<usize>> {
        self.blocks.iter().find(|b| b.contains(&point))
    }

    /// Points whose orbit is a singleton.
    pub fn fixed_points(&self) -> Vec<usize> {
        self.blocks
            .iter()
            .filter(|b| b.len() == 1)
            .filter_map(|b| b.first().copied())
            .collect()
    }

    /// Blocks with more than one element.
    pub fn nontrivial_blocks(&self) -> impl Iterator<Item = &BTreeSet<usize>> {
        self.blocks.iter().filter(|b| b.len() > 1)
    }

    /// Same blocks regardless of order.
    pub fn same_blocks_as(&self, blocks: &[BTreeSet<usize>]) -> bool {
        let mine: BTreeSet<&BTreeSet<usize>> = self.blocks.iter().collect();
        let theirs: BTreeSet<&BTreeSet<usize>> = blocks.iter().collect();
        mine == theirs && self.blocks.len() == blocks.len()
    }
}
