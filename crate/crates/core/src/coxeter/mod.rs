//! Finite Coxeter groups of types `A_n`, `B_n`, `D_n`, `I2(p)` and `G2`,
//! fully enumerated together with root data, descent sets, fixed spaces and
//! conjugacy classes.
//!
//! Elements are referred to by their index into [`CoxeterGroup::elements`];
//! the ordering is lexicographic in the concrete form, so every output is
//! reproducible. Products compose as functions: `u·v` applies `v` first.

mod classes;
mod linalg;
mod roots;

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

pub use classes::{
    conjugacy_label, element_types, lambda_order_descents, subset_equivalence_classes, type_of_element, ClassLabel,
    LambdaConvention, Partition, SubsetClass,
};
pub use roots::{root_system, Root, RootSystem};

use crate::caps::{Caps, HARD_MAX_ORDER};
use crate::error::{Error, Result};
use crate::rational::{int, Q};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    D,
    I2,
    G2,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::D => "D",
            Family::I2 => "I2",
            Family::G2 => "G2",
        };
        f.write_str(s)
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" | "C" => Ok(Family::B),
            "D" => Ok(Family::D),
            "I2" | "I" => Ok(Family::I2),
            "G2" | "G" => Ok(Family::G2),
            other => Err(Error::InvalidParameter(format!("unknown family {other:?}"))),
        }
    }
}

/// Names a group: the rank for `A`/`B`/`D`, the dihedral order parameter `p`
/// for `I2(p)`; ignored for `G2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupDescriptor {
    pub family: Family,
    pub rank_or_p: usize,
}

impl GroupDescriptor {
    pub fn new(family: Family, rank_or_p: usize) -> Self {
        let rank_or_p = if family == Family::G2 { 2 } else { rank_or_p };
        GroupDescriptor { family, rank_or_p }
    }

    pub fn a(n: usize) -> Self {
        Self::new(Family::A, n)
    }

    /// The symmetric group `S_n`, i.e. `A_{n-1}`.
    pub fn symmetric(n: usize) -> Self {
        Self::new(Family::A, n.saturating_sub(1))
    }

    pub fn b(n: usize) -> Self {
        Self::new(Family::B, n)
    }

    pub fn d(n: usize) -> Self {
        Self::new(Family::D, n)
    }

    pub fn i2(p: usize) -> Self {
        Self::new(Family::I2, p)
    }

    pub fn g2() -> Self {
        Self::new(Family::G2, 2)
    }

    /// Dimension of the reflection representation.
    pub fn rank(&self) -> usize {
        match self.family {
            Family::A | Family::B | Family::D => self.rank_or_p,
            Family::I2 | Family::G2 => 2,
        }
    }

    pub fn exponents(&self) -> Vec<u32> {
        let n = self.rank_or_p as u32;
        match self.family {
            Family::A => (1..=n).collect(),
            Family::B => (1..=n).map(|i| 2 * i - 1).collect(),
            Family::D => {
                let mut e: Vec<u32> = (1..n).map(|i| 2 * i - 1).collect();
                e.push(n - 1);
                e.sort_unstable();
                e
            }
            Family::I2 => vec![1, n - 1],
            Family::G2 => vec![1, 5],
        }
    }

    /// `Π (1 + m_i)`.
    pub fn order(&self) -> u128 {
        self.exponents().iter().map(|&m| 1 + m as u128).product()
    }

    pub fn validate(&self, caps: &Caps) -> Result<()> {
        let n = self.rank_or_p;
        let fail = |reason: String| Err(Error::UnsupportedDescriptor { descriptor: self.to_string(), reason });
        match self.family {
            Family::A if n < 1 || n > caps.max_rank_a => fail(format!("rank must be in 1..={}", caps.max_rank_a))?,
            Family::B if n < 1 || n > caps.max_rank_b => fail(format!("rank must be in 1..={}", caps.max_rank_b))?,
            Family::D if n < caps.min_rank_d.max(2) || n > caps.max_rank_d => {
                fail(format!("rank must be in {}..={}", caps.min_rank_d, caps.max_rank_d))?
            }
            Family::I2 if n < caps.min_dihedral.max(2) || n > caps.max_dihedral => {
                fail(format!("p must be in {}..={}", caps.min_dihedral, caps.max_dihedral))?
            }
            _ => {}
        }
        if self.order() > HARD_MAX_ORDER as u128 {
            return fail(format!("order {} exceeds the hard limit {HARD_MAX_ORDER}", self.order()));
        }
        Ok(())
    }
}

impl fmt::Display for GroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::G2 => f.write_str("G2"),
            Family::I2 => write!(f, "I2({})", self.rank_or_p),
            fam => write!(f, "{fam}{}", self.rank_or_p),
        }
    }
}

impl FromStr for GroupDescriptor {
    type Err = Error;

    /// Accepts `A3`, `B2`, `D4`, `I2(5)`, `G2`, and `S4` for `A3`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_uppercase();
        let bad = || Error::InvalidParameter(format!("cannot parse group {s:?}"));
        if t == "G2" {
            return Ok(Self::g2());
        }
        if let Some(rest) = t.strip_prefix("I2(").and_then(|r| r.strip_suffix(')')) {
            return rest.parse().map(Self::i2).map_err(|_| bad());
        }
        let (head, digits) = t.split_at(1);
        let n: usize = digits.parse().map_err(|_| bad())?;
        match head {
            "S" => Ok(Self::symmetric(n)),
            "A" => Ok(Self::a(n)),
            "B" | "C" => Ok(Self::b(n)),
            "D" => Ok(Self::d(n)),
            _ => Err(bad()),
        }
    }
}

/// Subset of the simple roots, as a bit mask over their indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct SimpleSet(pub u32);

impl SimpleSet {
    pub const EMPTY: SimpleSet = SimpleSet(0);

    pub fn full(rank: usize) -> Self {
        SimpleSet((1u32 << rank) - 1)
    }

    pub fn from_indices(indices: impl IntoIterator<Item = usize>) -> Self {
        SimpleSet(indices.into_iter().fold(0, |acc, i| acc | (1 << i)))
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 & (1 << i) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: SimpleSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: SimpleSet) -> bool {
        self.0 & other.0 != 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..32).filter(move |&i| self.contains(i))
    }

    /// All subsets of `{0..rank}` ordered by size, then lexicographically by
    /// sorted index list.
    pub fn all_ordered(rank: usize) -> Vec<SimpleSet> {
        let mut all: Vec<SimpleSet> = (0..1u32 << rank).map(SimpleSet).collect();
        all.sort_by_key(|s| (s.len(), s.iter().collect::<Vec<_>>()));
        all
    }

    /// Subsets of `self`, including the empty set and `self`.
    pub fn subsets(self) -> impl Iterator<Item = SimpleSet> {
        let full = self.0;
        let mut sub = Some(full);
        std::iter::from_fn(move || {
            let cur = sub?;
            sub = if cur == 0 { None } else { Some((cur - 1) & full) };
            Some(SimpleSet(cur))
        })
    }
}

impl fmt::Display for SimpleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|i| format!("a{}", i + 1)).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Concrete realization of a group element.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ConcreteForm {
    /// Signed permutation of the ambient coordinates in one-line notation:
    /// entry `i` is `±(j+1)` when `e_{i+1} ↦ ±e_{j+1}`. Type A uses only
    /// positive entries; `G2` elements are `±σ` for `σ ∈ S_3`.
    Signed(Vec<i8>),
    /// `r^rotation s^reflection` where `r = st` is the basic rotation.
    Dihedral { reflection: bool, rotation: u16 },
}

impl fmt::Display for ConcreteForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConcreteForm::Signed(images) => {
                let parts: Vec<String> = images.iter().map(|x| x.to_string()).collect();
                write!(f, "[{}]", parts.join(","))
            }
            ConcreteForm::Dihedral { reflection, rotation } => {
                write!(f, "r^{rotation}{}", if *reflection { "s" } else { "" })
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Element {
    pub form: ConcreteForm,
    pub descents: SimpleSet,
    pub length: u32,
}

/// A finite Coxeter group with every element and cached statistic.
#[derive(Debug, Clone)]
pub struct CoxeterGroup {
    descriptor: GroupDescriptor,
    rank: usize,
    elements: Vec<Element>,
    roots: Option<RootSystem>,
    exponents: Vec<u32>,
    identity: usize,
    longest: usize,
    generators: Vec<usize>,
    mult: Vec<u16>,
    inverse: Vec<usize>,
    /// `simple_images[w * rank + i]` is `j` when `w(α_i) = α_j`, else `NONE`.
    simple_images: Vec<u8>,
    simple_preserving: Vec<SimpleSet>,
    fixed_bases: Vec<Vec<Vec<Q>>>,
    fixed_dims: Vec<usize>,
    class_of: Vec<usize>,
    conjugacy_classes: Vec<Vec<usize>>,
    class_labels: Vec<ClassLabel>,
    subset_classes: Vec<SubsetClass>,
    subset_class_of: Vec<usize>,
    parabolics: Vec<Vec<u64>>,
}

const NONE: u8 = u8::MAX;

pub fn build_group(desc: GroupDescriptor) -> Result<CoxeterGroup> {
    build_group_with_caps(desc, &Caps::default())
}

pub fn build_group_with_caps(desc: GroupDescriptor, caps: &Caps) -> Result<CoxeterGroup> {
    desc.validate(caps)?;
    CoxeterGroup::enumerate(desc)
}

fn compose(a: &ConcreteForm, b: &ConcreteForm, p: usize) -> ConcreteForm {
    match (a, b) {
        (ConcreteForm::Signed(u), ConcreteForm::Signed(v)) => ConcreteForm::Signed(
            v.iter()
                .map(|&x| {
                    let img = u[x.unsigned_abs() as usize - 1];
                    if x < 0 {
                        -img
                    } else {
                        img
                    }
                })
                .collect(),
        ),
        (
            ConcreteForm::Dihedral { reflection: e, rotation: a },
            ConcreteForm::Dihedral { reflection: f, rotation: b },
        ) => {
            let p = p as i64;
            let b = if *e { -(*b as i64) } else { *b as i64 };
            ConcreteForm::Dihedral { reflection: e ^ f, rotation: (*a as i64 + b).rem_euclid(p) as u16 }
        }
        _ => unreachable!("mixed concrete forms"),
    }
}

fn apply_signed(perm: &[i8], v: &[Q]) -> Vec<Q> {
    let mut out = vec![Q::zero(); v.len()];
    for (i, &img) in perm.iter().enumerate() {
        let x = v[i];
        out[img.unsigned_abs() as usize - 1] = if img < 0 { -x } else { x };
    }
    out
}

impl CoxeterGroup {
    fn enumerate(desc: GroupDescriptor) -> Result<Self> {
        let rank = desc.rank();
        let p = desc.rank_or_p;
        let roots = match desc.family {
            Family::I2 => None,
            _ => Some(root_system(desc)?),
        };
        let (identity_form, gen_forms): (ConcreteForm, Vec<ConcreteForm>) = match &roots {
            Some(rs) => (
                ConcreteForm::Signed((1..=rs.ambient_dim as i8).collect()),
                rs.generators.iter().cloned().map(ConcreteForm::Signed).collect(),
            ),
            None => (
                ConcreteForm::Dihedral { reflection: false, rotation: 0 },
                vec![
                    ConcreteForm::Dihedral { reflection: true, rotation: 0 },
                    ConcreteForm::Dihedral { reflection: true, rotation: (p - 1) as u16 },
                ],
            ),
        };

        let mut seen: HashSet<ConcreteForm> = HashSet::from([identity_form.clone()]);
        let mut queue = VecDeque::from([identity_form.clone()]);
        while let Some(w) = queue.pop_front() {
            for g in &gen_forms {
                let wg = compose(&w, g, p);
                if seen.insert(wg.clone()) {
                    queue.push_back(wg);
                }
            }
        }
        let mut forms: Vec<ConcreteForm> = seen.into_iter().collect();
        forms.sort();
        let order = forms.len();
        if order as u128 != desc.order() {
            return Err(Error::InternalInconsistency(format!(
                "{desc}: enumerated {order} elements, expected {}",
                desc.order()
            )));
        }
        let index: HashMap<&ConcreteForm, usize> = forms.iter().enumerate().map(|(i, f)| (f, i)).collect();
        let identity = index[&identity_form];
        let generators: Vec<usize> = gen_forms.iter().map(|g| index[g]).collect();

        let right_gen: Vec<usize> = forms
            .iter()
            .flat_map(|w| gen_forms.iter().map(|g| index[&compose(w, g, p)]).collect::<Vec<_>>())
            .collect();

        // Breadth-first search over the Cayley graph gives lengths and a
        // spanning tree `v = parent(v) · s_via(v)`.
        let mut length = vec![u32::MAX; order];
        let mut parent = vec![usize::MAX; order];
        let mut via = vec![usize::MAX; order];
        let mut bfs = Vec::with_capacity(order);
        length[identity] = 0;
        bfs.push(identity);
        let mut head = 0;
        while head < bfs.len() {
            let w = bfs[head];
            head += 1;
            for i in 0..rank {
                let wg = right_gen[w * rank + i];
                if length[wg] == u32::MAX {
                    length[wg] = length[w] + 1;
                    parent[wg] = w;
                    via[wg] = i;
                    bfs.push(wg);
                }
            }
        }

        let mut mult = vec![0u16; order * order];
        for u in 0..order {
            let row = u * order;
            mult[row + identity] = u as u16;
            for &v in &bfs[1..] {
                let prev = mult[row + parent[v]] as usize;
                mult[row + v] = right_gen[prev * rank + via[v]] as u16;
            }
        }

        let inverse: Vec<usize> = (0..order)
            .map(|u| (0..order).find(|&v| mult[u * order + v] as usize == identity).expect("inverse exists"))
            .collect();

        // Descents and images of simple roots.
        let mut descents = vec![SimpleSet::EMPTY; order];
        let mut simple_images = vec![NONE; order * rank];
        match &roots {
            Some(rs) => {
                for (w, form) in forms.iter().enumerate() {
                    let ConcreteForm::Signed(perm) = form else { unreachable!() };
                    for (i, alpha) in rs.simple.iter().enumerate() {
                        let image = roots::act(perm, alpha);
                        match rs.locate(&image) {
                            Some((_, false)) => descents[w].0 |= 1 << i,
                            Some((_, true)) => {
                                if let Some(j) = rs.simple_index(&image) {
                                    simple_images[w * rank + i] = j as u8;
                                }
                            }
                            None => {
                                return Err(Error::InternalInconsistency(format!(
                                    "{desc}: {form} maps a simple root outside the root system"
                                )))
                            }
                        }
                    }
                }
            }
            None => {
                // w(α_s) > 0 iff l(ws) > l(w); w(α_s) = α_t iff wsw⁻¹ = t and l(ws) > l(w).
                for w in 0..order {
                    for i in 0..rank {
                        let ws = right_gen[w * rank + i];
                        if length[ws] < length[w] {
                            descents[w].0 |= 1 << i;
                        } else {
                            let conj = mult[ws * order + inverse[w]] as usize;
                            if let Some(j) = generators.iter().position(|&g| g == conj) {
                                simple_images[w * rank + i] = j as u8;
                            }
                        }
                    }
                }
            }
        }
        let simple_preserving: Vec<SimpleSet> = (0..order)
            .map(|w| SimpleSet::from_indices((0..rank).filter(|&i| simple_images[w * rank + i] != NONE)))
            .collect();

        let full = SimpleSet::full(rank);
        let longest_candidates: Vec<usize> = (0..order).filter(|&w| descents[w] == full).collect();
        let [longest] = longest_candidates[..] else {
            return Err(Error::InternalInconsistency(format!("{desc}: longest element is not unique")));
        };

        // Fixed spaces in the reflection representation.
        let (fixed_bases, fixed_dims): (Vec<Vec<Vec<Q>>>, Vec<usize>) = match &roots {
            Some(rs) => forms
                .iter()
                .map(|form| {
                    let ConcreteForm::Signed(perm) = form else { unreachable!() };
                    let basis = Self::fixed_basis(perm, rs.ambient_dim, rs.sum_zero);
                    let dim = basis.len();
                    (basis, dim)
                })
                .unzip(),
            None => forms
                .iter()
                .map(|form| {
                    let ConcreteForm::Dihedral { reflection, rotation } = form else { unreachable!() };
                    let dim = match (reflection, rotation) {
                        (false, 0) => 2,
                        (false, _) => 0,
                        (true, _) => 1,
                    };
                    (Vec::new(), dim)
                })
                .unzip(),
        };

        let elements: Vec<Element> = forms
            .into_iter()
            .enumerate()
            .map(|(w, form)| Element { form, descents: descents[w], length: length[w] })
            .collect();

        let mut group = CoxeterGroup {
            descriptor: desc,
            rank,
            elements,
            roots,
            exponents: desc.exponents(),
            identity,
            longest,
            generators,
            mult,
            inverse,
            simple_images,
            simple_preserving,
            fixed_bases,
            fixed_dims,
            class_of: Vec::new(),
            conjugacy_classes: Vec::new(),
            class_labels: Vec::new(),
            subset_classes: Vec::new(),
            subset_class_of: Vec::new(),
            parabolics: Vec::new(),
        };
        group.compute_conjugacy_classes();
        group.compute_subset_classes();
        group.compute_parabolics(&right_gen);
        Ok(group)
    }

    fn fixed_basis(perm: &[i8], dim: usize, sum_zero: bool) -> Vec<Vec<Q>> {
        let mut rows = vec![vec![Q::zero(); dim]; dim];
        for (i, &img) in perm.iter().enumerate() {
            rows[img.unsigned_abs() as usize - 1][i] = int(img.signum() as i128);
        }
        for (i, row) in rows.iter_mut().enumerate() {
            row[i] -= Q::one();
        }
        if sum_zero {
            rows.push(vec![Q::one(); dim]);
        }
        linalg::null_space(rows, dim)
    }

    fn compute_conjugacy_classes(&mut self) {
        let order = self.order();
        let mut class_of = vec![usize::MAX; order];
        let mut classes = Vec::new();
        for w in 0..order {
            if class_of[w] != usize::MAX {
                continue;
            }
            let c = classes.len();
            let mut members = Vec::new();
            for g in 0..order {
                let conj = self.mul(self.mul(g, w), self.inverse[g]);
                if class_of[conj] == usize::MAX {
                    class_of[conj] = c;
                    members.push(conj);
                }
            }
            members.sort_unstable();
            classes.push(members);
        }
        self.class_labels = classes.iter().enumerate().map(|(c, m)| classes::label_for(self, m[0], c)).collect();
        self.class_of = class_of;
        self.conjugacy_classes = classes;
    }

    fn compute_subset_classes(&mut self) {
        let rank = self.rank;
        let n_sub = 1usize << rank;
        let mut parent: Vec<usize> = (0..n_sub).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for w in 0..self.order() {
            let mask = self.simple_preserving[w];
            for k in mask.subsets() {
                let image = self.image_of_subset(w, k).expect("k inside the preserved mask");
                let (a, b) = (find(&mut parent, k.0 as usize), find(&mut parent, image.0 as usize));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let order = SimpleSet::all_ordered(rank);
        let mut groups: HashMap<usize, Vec<SimpleSet>> = HashMap::new();
        for &s in &order {
            let root = find(&mut parent, s.0 as usize);
            groups.entry(root).or_default().push(s);
        }
        let mut classes: Vec<SubsetClass> = groups.into_values().map(SubsetClass::new).collect();
        let position: HashMap<SimpleSet, usize> = order.iter().enumerate().map(|(i, &s)| (s, i)).collect();
        classes.sort_by_key(|c| (c.rank(), position[&c.members()[0]]));
        let mut class_of = vec![0; n_sub];
        for (ci, c) in classes.iter().enumerate() {
            for m in c.members() {
                class_of[m.0 as usize] = ci;
            }
        }
        self.subset_classes = classes;
        self.subset_class_of = class_of;
    }

    fn compute_parabolics(&mut self, right_gen: &[usize]) {
        let order = self.order();
        let words = order.div_ceil(64);
        let rank = self.rank;
        self.parabolics = (0..1u32 << rank)
            .map(|j| {
                let j = SimpleSet(j);
                let mut bits = vec![0u64; words];
                let mut stack = vec![self.identity];
                bits[self.identity / 64] |= 1 << (self.identity % 64);
                while let Some(w) = stack.pop() {
                    for i in j.iter() {
                        let wg = right_gen[w * rank + i];
                        if bits[wg / 64] & (1 << (wg % 64)) == 0 {
                            bits[wg / 64] |= 1 << (wg % 64);
                            stack.push(wg);
                        }
                    }
                }
                bits
            })
            .collect();
    }

    pub fn descriptor(&self) -> GroupDescriptor {
        self.descriptor
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn element(&self, w: usize) -> &Element {
        &self.elements[w]
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn longest_element(&self) -> usize {
        self.longest
    }

    /// Simple reflections, in simple-root order.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn root_system(&self) -> Option<&RootSystem> {
        self.roots.as_ref()
    }

    /// `u·v`, applying `v` first.
    #[inline]
    pub fn mul(&self, u: usize, v: usize) -> usize {
        self.mult[u * self.order() + v] as usize
    }

    pub(crate) fn mult_row(&self, u: usize) -> &[u16] {
        let n = self.order();
        &self.mult[u * n..(u + 1) * n]
    }

    pub fn inverse(&self, w: usize) -> usize {
        self.inverse[w]
    }

    pub fn index_of(&self, form: &ConcreteForm) -> Option<usize> {
        self.elements.binary_search_by(|e| e.form.cmp(form)).ok()
    }

    /// `j` with `w(α_i) = α_j`, if any.
    pub fn simple_image(&self, w: usize, i: usize) -> Option<usize> {
        match self.simple_images[w * self.rank + i] {
            NONE => None,
            j => Some(j as usize),
        }
    }

    /// `w(K)` when every root of `K` lands on a simple root.
    pub fn image_of_subset(&self, w: usize, k: SimpleSet) -> Option<SimpleSet> {
        let mut out = SimpleSet::EMPTY;
        for i in k.iter() {
            out.0 |= 1 << self.simple_image(w, i)?;
        }
        Some(out)
    }

    pub fn conjugacy_class_of(&self, w: usize) -> usize {
        self.class_of[w]
    }

    pub fn conjugacy_classes(&self) -> &[Vec<usize>] {
        &self.conjugacy_classes
    }

    pub fn class_labels(&self) -> &[ClassLabel] {
        &self.class_labels
    }

    /// Index into [`subset_equivalence_classes`] of the class containing `k`.
    pub fn subset_class_of(&self, k: SimpleSet) -> usize {
        self.subset_class_of[k.0 as usize]
    }

    pub(crate) fn parabolic_bits(&self, j: SimpleSet) -> &[u64] {
        &self.parabolics[j.0 as usize]
    }

    /// Whether `u` fixes every vector of `Fix_V(w)`.
    pub(crate) fn fixes_pointwise(&self, u: usize, w: usize) -> bool {
        match &self.elements[u].form {
            ConcreteForm::Signed(perm) => self.fixed_bases[w].iter().all(|b| apply_signed(perm, b) == *b),
            ConcreteForm::Dihedral { .. } => match self.fixed_dims[w] {
                2 => u == self.identity,
                0 => true,
                _ => u == self.identity || u == w,
            },
        }
    }
}

pub fn descent_set(g: &CoxeterGroup, w: usize) -> SimpleSet {
    g.elements[w].descents
}

/// Whether `w` maps every root of `k` to a simple root.
pub fn maps_into_simples(g: &CoxeterGroup, w: usize, k: SimpleSet) -> bool {
    k.is_subset(g.simple_preserving[w])
}

/// Dimension of the 1-eigenspace of `w` in the reflection representation.
pub fn fixed_space_dimension(g: &CoxeterGroup, w: usize) -> usize {
    g.fixed_dims[w]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(g: &CoxeterGroup, images: &[i8]) -> usize {
        g.index_of(&ConcreteForm::Signed(images.to_vec())).unwrap()
    }

    #[test]
    fn small_group_orders_and_exponents() {
        let s3 = build_group(GroupDescriptor::a(2)).unwrap();
        assert_eq!(s3.order(), 6);
        assert_eq!(s3.exponents(), &[1, 2]);
        let g2 = build_group(GroupDescriptor::g2()).unwrap();
        assert_eq!(g2.order(), 12);
        assert_eq!(g2.exponents(), &[1, 5]);
        let b2 = build_group(GroupDescriptor::b(2)).unwrap();
        assert_eq!(b2.order(), 8);
        assert_eq!(b2.exponents(), &[1, 3]);
    }

    #[test]
    fn descent_sets_in_s3() {
        let s3 = build_group(GroupDescriptor::a(2)).unwrap();
        assert_eq!(descent_set(&s3, s3.identity()), SimpleSet::EMPTY);
        assert_eq!(descent_set(&s3, perm(&s3, &[3, 2, 1])), SimpleSet::full(2));
        assert_eq!(s3.longest_element(), perm(&s3, &[3, 2, 1]));
        assert_eq!(descent_set(&s3, perm(&s3, &[2, 1, 3])), SimpleSet::from_indices([0]));
    }

    #[test]
    fn maps_into_simples_examples() {
        let s3 = build_group(GroupDescriptor::a(2)).unwrap();
        let a1 = SimpleSet::from_indices([0]);
        assert!(maps_into_simples(&s3, s3.identity(), SimpleSet::full(2)));
        assert!(!maps_into_simples(&s3, s3.longest_element(), a1));
        let cycle = perm(&s3, &[2, 3, 1]);
        assert!(maps_into_simples(&s3, cycle, a1));
        assert_eq!(s3.simple_image(cycle, 0), Some(1));
    }

    #[test]
    fn fixed_space_examples() {
        let s3 = build_group(GroupDescriptor::a(2)).unwrap();
        assert_eq!(fixed_space_dimension(&s3, s3.identity()), 2);
        assert_eq!(fixed_space_dimension(&s3, perm(&s3, &[3, 2, 1])), 1);
        let b3 = build_group(GroupDescriptor::b(3)).unwrap();
        assert_eq!(fixed_space_dimension(&b3, perm(&b3, &[-1, -2, -3])), 0);
        assert_eq!(fixed_space_dimension(&b3, b3.identity()), 3);
    }

    #[test]
    fn unsupported_descriptors_are_refused() {
        for desc in [GroupDescriptor::a(7), GroupDescriptor::b(6), GroupDescriptor::d(3), GroupDescriptor::i2(13)] {
            assert!(matches!(build_group(desc), Err(Error::UnsupportedDescriptor { .. })), "{desc}");
        }
    }

    #[test]
    fn descriptor_round_trips_through_text() {
        for s in ["A3", "B2", "D4", "I2(5)", "G2"] {
            assert_eq!(s.parse::<GroupDescriptor>().unwrap().to_string(), s);
        }
        assert_eq!("S4".parse::<GroupDescriptor>().unwrap(), GroupDescriptor::a(3));
    }

    #[test]
    fn dihedral_descents_follow_lengths() {
        let g = build_group(GroupDescriptor::i2(5)).unwrap();
        assert_eq!(g.order(), 10);
        let w0 = g.longest_element();
        assert_eq!(g.element(w0).length, 5);
        assert_eq!(descent_set(&g, w0), SimpleSet::full(2));
        for w in 0..g.order() {
            assert_eq!(descent_set(&g, w).is_empty(), w == g.identity());
        }
    }

    #[test]
    fn subsets_in_canonical_order() {
        let order: Vec<u32> = SimpleSet::all_ordered(3).into_iter().map(|s| s.0).collect();
        assert_eq!(order, vec![0b000, 0b001, 0b010, 0b100, 0b011, 0b101, 0b110, 0b111]);
        assert_eq!(SimpleSet(0b101).subsets().count(), 4);
    }
}
