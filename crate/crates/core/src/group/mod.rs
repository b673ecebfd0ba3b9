//! Finite groups as full multiplication tables.
//!
//! A table makes every check exact and total: associativity, subgroup
//! closure, normality and homomorphism conditions are all finite loops.
//! Element indices are the semantic identity; labels are display only.

mod catalog;

pub use catalog::{catalog_group, catalog_names};

use crate::caps::Caps;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    identity: u32,
    labels: Option<Vec<String>>,
}

impl FiniteGroup {
    /// Build and validate a group from a row-major multiplication table.
    ///
    /// Associativity is checked exhaustively up to order 64 and on 10^4
    /// random triples above that.
    pub fn from_table(mul_table: Vec<Vec<u32>>, labels: Option<Vec<String>>) -> Result<Self> {
        let order = mul_table.len();
        if order == 0 {
            return Err(Error::InvalidGroup("empty table".into()));
        }
        let mut mul = Vec::with_capacity(order * order);
        for row in &mul_table {
            if row.len() != order {
                return Err(Error::InvalidGroup("table is not square".into()));
            }
            for &v in row {
                if v as usize >= order {
                    return Err(Error::InvalidGroup(format!("index {v} out of range")));
                }
                mul.push(v);
            }
        }
        if let Some(ref l) = labels {
            if l.len() != order {
                return Err(Error::InvalidGroup("label count differs from order".into()));
            }
        }

        // Locate a two-sided identity.
        let mut identity = None;
        'search: for e in 0..order as u32 {
            for x in 0..order as u32 {
                if mul[e as usize * order + x as usize] != x || mul[x as usize * order + e as usize] != x {
                    continue 'search;
                }
            }
            identity = Some(e);
            break;
        }
        let identity = identity.ok_or_else(|| Error::InvalidGroup("no identity element".into()))?;

        let mut inv = vec![u32::MAX; order];
        for x in 0..order {
            let found = (0..order).find(|&y| mul[x * order + y] == identity && mul[y * order + x] == identity);
            inv[x] = found.ok_or_else(|| Error::InvalidGroup(format!("element {x} has no inverse")))? as u32;
        }

        let g = FiniteGroup { order, mul, inv, identity, labels };
        g.check_associativity()?;
        Ok(g)
    }

    fn check_associativity(&self) -> Result<()> {
        let n = self.order as u32;
        if self.order <= 64 {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                            return Err(Error::InvalidGroup(format!("({a}*{b})*{c} != {a}*({b}*{c})")));
                        }
                    }
                }
            }
        } else {
            use rand::Rng;
            let mut rng = crate::rng::stream(0, "assoc-check", self.order as u64);
            for _ in 0..10_000 {
                let a = rng.gen_range(0..n);
                let b = rng.gen_range(0..n);
                let c = rng.gen_range(0..n);
                if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                    return Err(Error::InvalidGroup(format!("({a}*{b})*{c} != {a}*({b}*{c})")));
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> u32 {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[a as usize * self.order + b as usize]
    }

    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        self.inv[a as usize]
    }

    pub fn conj(&self, g: u32, x: u32) -> u32 {
        // g x g^{-1}
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn pow(&self, a: u32, e: i64) -> u32 {
        let base = if e < 0 { self.inv(a) } else { a };
        let mut acc = self.identity;
        for _ in 0..e.unsigned_abs() {
            acc = self.mul(acc, base);
        }
        acc
    }

    pub fn element_order(&self, a: u32) -> usize {
        let mut x = a;
        let mut n = 1;
        while x != self.identity {
            x = self.mul(x, a);
            n += 1;
        }
        n
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.order as u32
    }

    pub fn label(&self, x: u32) -> String {
        match &self.labels {
            Some(l) => l[x as usize].clone(),
            None => x.to_string(),
        }
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Closure of a set of elements under multiplication and inverses.
    pub fn closure(&self, seed: &[u32]) -> Vec<u32> {
        let mut set: BTreeSet<u32> = seed.iter().copied().collect();
        set.insert(self.identity);
        loop {
            let mut added = false;
            let current: Vec<u32> = set.iter().copied().collect();
            for &a in &current {
                for &b in &current {
                    if set.insert(self.mul(a, b)) {
                        added = true;
                    }
                }
                if set.insert(self.inv(a)) {
                    added = true;
                }
            }
            if !added {
                break;
            }
        }
        set.into_iter().collect()
    }

    /// A small generating sequence, chosen greedily by index.
    pub fn generators(&self) -> Vec<u32> {
        let mut gens = Vec::new();
        let mut span = vec![self.identity];
        while span.len() < self.order {
            let next = self.elements().find(|x| !span.contains(x)).expect("span is proper");
            gens.push(next);
            span = self.closure(&gens);
        }
        gens
    }

    /// Structural fingerprint used as a cheap ownership id.
    pub fn fingerprint(&self) -> u64 {
        let mut h: u64 = 0xcbf29ce484222325;
        let mut eat = |v: u64| {
            h ^= v;
            h = h.wrapping_mul(0x100000001b3);
        };
        eat(self.order as u64);
        for &v in &self.mul {
            eat(v as u64);
        }
        h
    }
}

/// A subgroup, stored as a sorted duplicate-free element list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    parent: Arc<FiniteGroup>,
    elements: Vec<u32>,
}

impl Subgroup {
    pub fn new(parent: Arc<FiniteGroup>, mut elements: Vec<u32>) -> Result<Self> {
        elements.sort_unstable();
        elements.dedup();
        if !elements.contains(&parent.identity()) {
            return Err(Error::InvalidSubgroup("missing identity".into()));
        }
        for &a in &elements {
            if a as usize >= parent.order() {
                return Err(Error::InvalidSubgroup(format!("index {a} out of range")));
            }
            if elements.binary_search(&parent.inv(a)).is_err() {
                return Err(Error::InvalidSubgroup(format!("not closed under inverse at {a}")));
            }
            for &b in &elements {
                if elements.binary_search(&parent.mul(a, b)).is_err() {
                    return Err(Error::InvalidSubgroup(format!("not closed under product at ({a},{b})")));
                }
            }
        }
        Ok(Subgroup { parent, elements })
    }

    pub fn trivial(parent: Arc<FiniteGroup>) -> Self {
        let e = parent.identity();
        Subgroup { parent, elements: vec![e] }
    }

    pub fn full(parent: Arc<FiniteGroup>) -> Self {
        let elements = parent.elements().collect();
        Subgroup { parent, elements }
    }

    pub fn parent(&self) -> &Arc<FiniteGroup> {
        &self.parent
    }

    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, x: u32) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn contains_subgroup(&self, other: &Subgroup) -> bool {
        other.elements.iter().all(|&x| self.contains(x))
    }
}

/// True iff `g s g^{-1} = s` for every `g` in the parent.
pub fn is_normal(s: &Subgroup) -> bool {
    let g = s.parent();
    g.elements().all(|x| s.elements().iter().all(|&h| s.contains(g.conj(x, h))))
}

/// The set `{x y | x in k1, y in k2}` as a subgroup. Requires both inputs
/// normal, which makes the set a subgroup (and itself normal).
pub fn product_subgroup(k1: &Subgroup, k2: &Subgroup) -> Result<Subgroup> {
    if !Arc::ptr_eq(k1.parent(), k2.parent()) && k1.parent() != k2.parent() {
        return Err(Error::OwnerMismatch);
    }
    if !is_normal(k1) || !is_normal(k2) {
        return Err(Error::NotNormal);
    }
    let g = k1.parent();
    let mut set = BTreeSet::new();
    for &x in k1.elements() {
        for &y in k2.elements() {
            set.insert(g.mul(x, y));
        }
    }
    Subgroup::new(Arc::clone(k1.parent()), set.into_iter().collect())
}

/// Every subgroup, each exactly once, sorted by size then element lists.
pub fn all_subgroups(g: &Arc<FiniteGroup>, caps: &Caps) -> Result<Vec<Subgroup>> {
    caps.check("subgroup enumeration order", g.order(), caps.subgroup_order)?;
    let mut seen: BTreeSet<Vec<u32>> = BTreeSet::new();
    seen.insert(vec![g.identity()]);
    let mut frontier: Vec<Vec<u32>> = vec![vec![g.identity()]];
    while let Some(h) = frontier.pop() {
        for x in g.elements() {
            if h.binary_search(&x).is_ok() {
                continue;
            }
            let mut seed = h.clone();
            seed.push(x);
            let closure = g.closure(&seed);
            if seen.insert(closure.clone()) {
                frontier.push(closure);
            }
        }
    }
    let mut list: Vec<Vec<u32>> = seen.into_iter().collect();
    list.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    list.into_iter().map(|els| Subgroup::new(Arc::clone(g), els)).collect()
}

/// A group automorphism, stored as the image permutation of indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupAutomorphism {
    group: Arc<FiniteGroup>,
    image: Vec<u32>,
}

impl GroupAutomorphism {
    pub fn new(group: Arc<FiniteGroup>, image: Vec<u32>) -> Result<Self> {
        if image.len() != group.order() {
            return Err(Error::InvalidAutomorphism("image length differs from order".into()));
        }
        let mut seen = vec![false; group.order()];
        for &v in &image {
            if v as usize >= group.order() || seen[v as usize] {
                return Err(Error::InvalidAutomorphism("image is not a permutation".into()));
            }
            seen[v as usize] = true;
        }
        if image[group.identity() as usize] != group.identity() {
            return Err(Error::InvalidAutomorphism("identity not fixed".into()));
        }
        for a in group.elements() {
            for b in group.elements() {
                if image[group.mul(a, b) as usize] != group.mul(image[a as usize], image[b as usize]) {
                    return Err(Error::InvalidAutomorphism(format!("not multiplicative at ({a},{b})")));
                }
            }
        }
        Ok(GroupAutomorphism { group, image })
    }

    pub fn identity(group: Arc<FiniteGroup>) -> Self {
        let image = group.elements().collect();
        GroupAutomorphism { group, image }
    }

    /// Conjugation by `g`.
    pub fn inner(group: Arc<FiniteGroup>, g: u32) -> Self {
        let image = group.elements().map(|x| group.conj(g, x)).collect();
        GroupAutomorphism { group, image }
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn image(&self) -> &[u32] {
        &self.image
    }

    #[inline]
    pub fn apply(&self, x: u32) -> u32 {
        self.image[x as usize]
    }

    pub fn compose(&self, other: &GroupAutomorphism) -> GroupAutomorphism {
        // self after other
        let image = other.image.iter().map(|&x| self.image[x as usize]).collect();
        GroupAutomorphism { group: Arc::clone(&self.group), image }
    }

    pub fn inverse(&self) -> GroupAutomorphism {
        let mut image = vec![0; self.image.len()];
        for (x, &y) in self.image.iter().enumerate() {
            image[y as usize] = x as u32;
        }
        GroupAutomorphism { group: Arc::clone(&self.group), image }
    }

    pub fn apply_pow(&self, x: u32, e: i64) -> u32 {
        let f = if e < 0 { self.inverse() } else { self.clone() };
        let mut y = x;
        for _ in 0..e.unsigned_abs() {
            y = f.apply(y);
        }
        y
    }

    /// Order of the automorphism as a permutation.
    pub fn order(&self) -> usize {
        let id: Vec<u32> = self.group.elements().collect();
        let mut acc = self.clone();
        let mut n = 1;
        while acc.image != id {
            acc = self.compose(&acc);
            n += 1;
        }
        n
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &v)| i as u32 == v)
    }
}

/// The full automorphism group, enumerated by backtracking over generator
/// images (candidates restricted to elements of equal order) and extending
/// each assignment through the multiplication table.
pub fn automorphisms(g: &Arc<FiniteGroup>, caps: &Caps) -> Result<Vec<GroupAutomorphism>> {
    caps.check("automorphism enumeration order", g.order(), caps.aut_order)?;
    let gens = g.generators();
    if gens.is_empty() {
        return Ok(vec![GroupAutomorphism::identity(Arc::clone(g))]);
    }
    let orders: Vec<usize> = g.elements().map(|x| g.element_order(x)).collect();
    let candidates: Vec<Vec<u32>> = gens
        .iter()
        .map(|&gen| g.elements().filter(|&x| orders[x as usize] == orders[gen as usize]).collect())
        .collect();

    let mut out = Vec::new();
    let mut choice = vec![0usize; gens.len()];
    'assign: loop {
        let images: Vec<u32> = gens.iter().enumerate().map(|(i, _)| candidates[i][choice[i]]).collect();
        if let Some(full) = extend_hom(g, &gens, &images) {
            if is_bijective(&full) {
                // extend_hom already guarantees multiplicativity
                out.push(GroupAutomorphism { group: Arc::clone(g), image: full });
            }
        }
        // odometer over candidate tuples
        for i in (0..gens.len()).rev() {
            choice[i] += 1;
            if choice[i] < candidates[i].len() {
                continue 'assign;
            }
            choice[i] = 0;
            if i == 0 {
                break 'assign;
            }
        }
    }
    out.sort_by(|a, b| a.image.cmp(&b.image));
    out.dedup_by(|a, b| a.image == b.image);
    Ok(out)
}

/// Extend generator images to a full homomorphism via the table, or fail on
/// an inconsistency.
fn extend_hom(g: &FiniteGroup, gens: &[u32], images: &[u32]) -> Option<Vec<u32>> {
    let n = g.order();
    let mut map = vec![u32::MAX; n];
    map[g.identity() as usize] = g.identity();
    for (&gen, &img) in gens.iter().zip(images) {
        if map[gen as usize] != u32::MAX && map[gen as usize] != img {
            return None;
        }
        map[gen as usize] = img;
    }
    loop {
        let mut changed = false;
        for a in 0..n as u32 {
            if map[a as usize] == u32::MAX {
                continue;
            }
            for b in 0..n as u32 {
                if map[b as usize] == u32::MAX {
                    continue;
                }
                let ab = g.mul(a, b);
                let img = g.mul(map[a as usize], map[b as usize]);
                if map[ab as usize] == u32::MAX {
                    map[ab as usize] = img;
                    changed = true;
                } else if map[ab as usize] != img {
                    return None;
                }
            }
        }
        if !changed {
            break;
        }
    }
    if map.iter().any(|&v| v == u32::MAX) {
        return None;
    }
    Some(map)
}

fn is_bijective(map: &[u32]) -> bool {
    let mut seen = vec![false; map.len()];
    for &v in map {
        if seen[v as usize] {
            return false;
        }
        seen[v as usize] = true;
    }
    true
}

/// Isomorphism test by backtracking over generator images. Intended for the
/// small catalog sizes; both orders must agree.
pub fn are_isomorphic(g: &FiniteGroup, h: &FiniteGroup) -> bool {
    if g.order() != h.order() {
        return false;
    }
    let gens = g.generators();
    if gens.is_empty() {
        return true;
    }
    let g_orders: Vec<usize> = g.elements().map(|x| g.element_order(x)).collect();
    let h_orders: Vec<usize> = h.elements().map(|x| h.element_order(x)).collect();
    let candidates: Vec<Vec<u32>> = gens
        .iter()
        .map(|&gen| h.elements().filter(|&x| h_orders[x as usize] == g_orders[gen as usize]).collect())
        .collect();
    if candidates.iter().any(Vec::is_empty) {
        return false;
    }
    let mut choice = vec![0usize; gens.len()];
    'assign: loop {
        let images: Vec<u32> = gens.iter().enumerate().map(|(i, _)| candidates[i][choice[i]]).collect();
        if let Some(full) = extend_cross_hom(g, h, &gens, &images) {
            if is_bijective(&full) {
                return true;
            }
        }
        for i in (0..gens.len()).rev() {
            choice[i] += 1;
            if choice[i] < candidates[i].len() {
                continue 'assign;
            }
            choice[i] = 0;
            if i == 0 {
                break 'assign;
            }
        }
    }
    false
}

fn extend_cross_hom(g: &FiniteGroup, h: &FiniteGroup, gens: &[u32], images: &[u32]) -> Option<Vec<u32>> {
    let n = g.order();
    let mut map = vec![u32::MAX; n];
    map[g.identity() as usize] = h.identity();
    for (&gen, &img) in gens.iter().zip(images) {
        if map[gen as usize] != u32::MAX && map[gen as usize] != img {
            return None;
        }
        map[gen as usize] = img;
    }
    loop {
        let mut changed = false;
        for a in 0..n as u32 {
            if map[a as usize] == u32::MAX {
                continue;
            }
            for b in 0..n as u32 {
                if map[b as usize] == u32::MAX {
                    continue;
                }
                let ab = g.mul(a, b);
                let img = h.mul(map[a as usize], map[b as usize]);
                if map[ab as usize] == u32::MAX {
                    map[ab as usize] = img;
                    changed = true;
                } else if map[ab as usize] != img {
                    return None;
                }
            }
        }
        if !changed {
            break;
        }
    }
    if map.iter().any(|&v| v == u32::MAX) {
        return None;
    }
    Some(map)
}

// JSON form: { "order": n, "mul": [[..]], "labels": [..] }, mul row-major.
#[derive(Serialize, Deserialize)]
struct GroupRepr {
    order: usize,
    mul: Vec<Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

impl Serialize for FiniteGroup {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mul = (0..self.order)
            .map(|i| self.mul[i * self.order..(i + 1) * self.order].to_vec())
            .collect();
        GroupRepr { order: self.order, mul, labels: self.labels.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for FiniteGroup {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = GroupRepr::deserialize(d)?;
        if repr.mul.len() != repr.order {
            return Err(serde::de::Error::custom("order does not match table size"));
        }
        FiniteGroup::from_table(repr.mul, repr.labels).map_err(serde::de::Error::custom)
    }
}

/// A group referenced either by catalog name or as an inline table.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupRef {
    Name(String),
    Inline(FiniteGroup),
}

impl GroupRef {
    pub fn resolve(&self) -> Result<Arc<FiniteGroup>> {
        match self {
            GroupRef::Name(name) => catalog_group(name),
            GroupRef::Inline(g) => Ok(Arc::new(g.clone())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: usize) -> Arc<FiniteGroup> {
        catalog_group(&format!("Z/{n}")).unwrap()
    }

    fn s3() -> Arc<FiniteGroup> {
        catalog_group("S_3").unwrap()
    }

    #[test]
    fn trivial_group_has_one_subgroup() {
        let g = catalog_group("trivial").unwrap();
        let subs = all_subgroups(&g, &Caps::default()).unwrap();
        assert_eq!(subs.len(), 1);
        assert_eq!(subs[0].elements(), &[0]);
    }

    #[test]
    fn z4_has_three_subgroups() {
        let subs = all_subgroups(&z(4), &Caps::default()).unwrap();
        assert_eq!(subs.len(), 3);
        assert_eq!(subs.iter().map(Subgroup::order).collect::<Vec<_>>(), vec![1, 2, 4]);
    }

    #[test]
    fn s3_has_six_subgroups() {
        let subs = all_subgroups(&s3(), &Caps::default()).unwrap();
        assert_eq!(subs.len(), 6);
    }

    #[test]
    fn subgroup_cap_enforced() {
        let caps = Caps { subgroup_order: 2, ..Caps::default() };
        assert!(matches!(all_subgroups(&z(4), &caps), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn transposition_subgroup_not_normal_in_s3() {
        let g = s3();
        let tau = g.elements().find(|&x| g.element_order(x) == 2).unwrap();
        let sub = Subgroup::new(Arc::clone(&g), vec![g.identity(), tau]).unwrap();
        assert!(!is_normal(&sub));
    }

    #[test]
    fn a3_normal_in_s3() {
        let g = s3();
        let rot = g.elements().find(|&x| g.element_order(x) == 3).unwrap();
        let a3 = Subgroup::new(Arc::clone(&g), g.closure(&[rot])).unwrap();
        assert_eq!(a3.order(), 3);
        assert!(is_normal(&a3));
    }

    #[test]
    fn product_subgroup_in_z6() {
        let g = z(6);
        let k1 = Subgroup::new(Arc::clone(&g), g.closure(&[3])).unwrap();
        let k2 = Subgroup::new(Arc::clone(&g), g.closure(&[2])).unwrap();
        let p = product_subgroup(&k1, &k2).unwrap();
        assert_eq!(p.order(), 6);
    }

    #[test]
    fn product_subgroup_units() {
        let g = z(6);
        let trivial = Subgroup::trivial(Arc::clone(&g));
        let k2 = Subgroup::new(Arc::clone(&g), g.closure(&[2])).unwrap();
        assert_eq!(product_subgroup(&trivial, &k2).unwrap(), k2);
        assert_eq!(product_subgroup(&k2, &k2).unwrap(), k2);
    }

    #[test]
    fn product_subgroup_requires_normal() {
        let g = s3();
        let tau = g.elements().find(|&x| g.element_order(x) == 2).unwrap();
        let sub = Subgroup::new(Arc::clone(&g), vec![g.identity(), tau]).unwrap();
        assert_eq!(product_subgroup(&sub, &sub), Err(Error::NotNormal));
    }

    #[test]
    fn automorphism_counts() {
        let caps = Caps::default();
        assert_eq!(automorphisms(&catalog_group("trivial").unwrap(), &caps).unwrap().len(), 1);
        assert_eq!(automorphisms(&z(3), &caps).unwrap().len(), 2);
        assert_eq!(automorphisms(&catalog_group("Z/2xZ/2").unwrap(), &caps).unwrap().len(), 6);
        assert_eq!(automorphisms(&s3(), &caps).unwrap().len(), 6);
        assert_eq!(automorphisms(&catalog_group("Q_8").unwrap(), &caps).unwrap().len(), 24);
    }

    #[test]
    fn automorphisms_closed_under_composition() {
        let g = catalog_group("Z/2xZ/2").unwrap();
        let auts = automorphisms(&g, &Caps::default()).unwrap();
        for a in &auts {
            for b in &auts {
                let c = a.compose(b);
                assert!(auts.iter().any(|x| x.image() == c.image()));
            }
        }
    }

    #[test]
    fn group_json_round_trip() {
        let g = s3();
        let s = serde_json::to_string(&*g).unwrap();
        let back: FiniteGroup = serde_json::from_str(&s).unwrap();
        assert_eq!(*g, back);
    }

    #[test]
    fn bad_tables_rejected() {
        // index out of range
        assert!(FiniteGroup::from_table(vec![vec![1]], None).is_err());
        // no identity
        assert!(FiniteGroup::from_table(vec![vec![1, 0], vec![1, 0]], None).is_err());
        // has an identity but no consistent inverses
        let t = vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 1, 0]];
        assert!(FiniteGroup::from_table(t, None).is_err());
    }
}
