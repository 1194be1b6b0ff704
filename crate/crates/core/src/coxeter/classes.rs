use std::fmt;

use serde::{Deserialize, Serialize};

use super::{ConcreteForm, CoxeterGroup, Family, SimpleSet};
use crate::error::{Error, Result};

/// A W-orbit of subsets of the simple roots.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubsetClass {
    members: Vec<SimpleSet>,
}

impl SubsetClass {
    pub(crate) fn new(members: Vec<SimpleSet>) -> Self {
        SubsetClass { members }
    }

    /// Members in size-then-lex order.
    pub fn members(&self) -> &[SimpleSet] {
        &self.members
    }

    /// `|λ|`.
    pub fn size(&self) -> usize {
        self.members.len()
    }

    /// `‖λ‖`, the common cardinality of the members.
    pub fn rank(&self) -> usize {
        self.members[0].len()
    }
}

/// Weakly decreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct Partition(pub Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all(n: u32) -> Vec<Partition> {
        fn rec(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for part in (1..=max.min(n)).rev() {
                cur.push(part);
                rec(n - part, part, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Multiplicity of each part size, indexed from size 1.
    pub fn multiplicities(&self) -> Vec<u32> {
        let max = self.0.first().copied().unwrap_or(0) as usize;
        let mut m = vec![0; max];
        for &p in &self.0 {
            m[p as usize - 1] += 1;
        }
        m
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Name of a conjugacy class.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ClassLabel {
    /// Cycle type, for the symmetric groups.
    Partition(Partition),
    /// Lengths of the positive and of the negative cycles, for `B_n`.
    Signed { positive: Partition, negative: Partition },
    /// Position of the class in [`CoxeterGroup::conjugacy_classes`].
    Index(usize),
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassLabel::Partition(p) => write!(f, "{p}"),
            ClassLabel::Signed { positive, negative } => write!(f, "({positive},{negative})"),
            ClassLabel::Index(i) => write!(f, "#{i}"),
        }
    }
}

/// Cycle lengths of a signed permutation, split by the sign product along
/// each cycle.
pub(crate) fn signed_cycle_type(perm: &[i8]) -> (Partition, Partition) {
    let n = perm.len();
    let mut seen = vec![false; n];
    let (mut pos, mut neg) = (Vec::new(), Vec::new());
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let (mut len, mut sign, mut i) = (0u32, 1i8, start);
        while !seen[i] {
            seen[i] = true;
            len += 1;
            sign *= perm[i].signum();
            i = perm[i].unsigned_abs() as usize - 1;
        }
        if sign > 0 {
            pos.push(len);
        } else {
            neg.push(len);
        }
    }
    (Partition::new(pos), Partition::new(neg))
}

pub(crate) fn label_for(g: &CoxeterGroup, w: usize, class_index: usize) -> ClassLabel {
    match (g.descriptor.family, &g.elements[w].form) {
        (Family::A, ConcreteForm::Signed(perm)) => ClassLabel::Partition(signed_cycle_type(perm).0),
        (Family::B, ConcreteForm::Signed(perm)) => {
            let (positive, negative) = signed_cycle_type(perm);
            ClassLabel::Signed { positive, negative }
        }
        _ => ClassLabel::Index(class_index),
    }
}

/// Cycle type (type A), signed cycle type (type B), or the class index.
pub fn conjugacy_label(g: &CoxeterGroup, w: usize) -> ClassLabel {
    g.class_labels[g.class_of[w]].clone()
}

/// The W-orbits of subsets of the simple roots, ordered by rank and then by
/// their first member.
pub fn subset_equivalence_classes(g: &CoxeterGroup) -> &[SubsetClass] {
    &g.subset_classes
}

fn class_of_stabilizer(g: &CoxeterGroup, stabilizer: &[usize]) -> Result<usize> {
    let order = g.order();
    let words = order.div_ceil(64);
    let candidates: Vec<SimpleSet> = (0..1u32 << g.rank())
        .map(SimpleSet)
        .filter(|&j| g.parabolic_bits(j).iter().map(|b| b.count_ones() as usize).sum::<usize>() == stabilizer.len())
        .collect();
    let mut bits = vec![0u64; words];
    for h in 0..order {
        bits.fill(0);
        let h_inv = g.inverse(h);
        for &u in stabilizer {
            let c = g.mul(g.mul(h, u), h_inv);
            bits[c / 64] |= 1 << (c % 64);
        }
        if let Some(&j) = candidates.iter().find(|&&j| g.parabolic_bits(j) == bits.as_slice()) {
            return Ok(g.subset_class_of(j));
        }
    }
    Err(Error::InternalInconsistency(format!(
        "{}: stabilizer of order {} is not conjugate to a standard parabolic subgroup",
        g.descriptor,
        stabilizer.len()
    )))
}

/// The class `λ` of subsets `J` with `W_J` conjugate to the pointwise
/// stabilizer of `Fix_V(w)`, found by brute-force search over conjugators.
/// Returns an index into [`subset_equivalence_classes`].
pub fn type_of_element(g: &CoxeterGroup, w: usize) -> Result<usize> {
    let stabilizer: Vec<usize> = (0..g.order()).filter(|&u| g.fixes_pointwise(u, w)).collect();
    class_of_stabilizer(g, &stabilizer)
}

/// [`type_of_element`] for every element. The type is constant on conjugacy
/// classes, so the search runs once per class.
pub fn element_types(g: &CoxeterGroup) -> Result<Vec<usize>> {
    let mut types = vec![0; g.order()];
    for class in g.conjugacy_classes() {
        let t = type_of_element(g, class[0])?;
        for &w in class {
            types[w] = t;
        }
    }
    Ok(types)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LambdaConvention {
    /// Descent at `i` when `w(i) <_Λ w(i+1)`, literally as the inequality is
    /// usually printed; this makes the identity have `n` descents.
    AsPrinted,
    /// Descent at `i` when `w(i) >_Λ w(i+1)`; agrees with root-system
    /// descents for the simple roots `e_i - e_{i+1}`, `e_n`.
    Corrected,
}

/// Number of descents of a signed permutation in `B_n` computed
/// combinatorially with the order `+1 < +2 < ... < +n < n+1 < -n < ... < -1`
/// and the convention `w(n+1) = n+1`.
pub fn lambda_order_descents(g: &CoxeterGroup, w: usize, convention: LambdaConvention) -> Result<usize> {
    let (Family::B, ConcreteForm::Signed(perm)) = (g.descriptor.family, &g.elements[w].form) else {
        return Err(Error::UnsupportedFamily(g.descriptor.to_string()));
    };
    let n = perm.len() as i32;
    let key = |a: i32| if a > 0 { a } else { 3 * n + 2 + a };
    let mut values: Vec<i32> = perm.iter().map(|&x| x as i32).collect();
    values.push(n + 1);
    Ok(values
        .windows(2)
        .filter(|p| match convention {
            LambdaConvention::AsPrinted => key(p[0]) < key(p[1]),
            LambdaConvention::Corrected => key(p[0]) > key(p[1]),
        })
        .count())
}
