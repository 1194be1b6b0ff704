//! The signed measures `M_{W,x} = Σ_λ e_λ / x^{‖λ‖}` and what is computed
//! from them: closed forms, class distributions, convolution, distance to
//! uniform and samplers.

mod closed_form;
mod sample;

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::coxeter::{subset_equivalence_classes, ClassLabel, CoxeterGroup, SimpleSet};
use crate::descent_algebra::{DescentAlgebra, GroupAlgebraElement};
use crate::error::{Error, Result};
use crate::rational::{abs, format_q, int, pow, Q};

pub use closed_form::{closed_form, identity_value, longest_value};
pub use sample::{gsr_shuffle, gsr_shuffle_with_caps, sample};

/// `M_{W,x}` together with its parameter.
#[derive(Debug, Clone, PartialEq)]
pub struct Measure<'g> {
    element: GroupAlgebraElement<'g>,
    x: Q,
}

impl<'g> Measure<'g> {
    pub fn group(&self) -> &'g CoxeterGroup {
        self.element.group()
    }

    pub fn parameter(&self) -> Q {
        self.x
    }

    pub fn element(&self) -> &GroupAlgebraElement<'g> {
        &self.element
    }

    pub fn coefficients(&self) -> &[Q] {
        self.element.coefficients()
    }

    pub fn coefficient(&self, w: usize) -> Q {
        self.element.coefficient(w)
    }

    pub fn total(&self) -> Q {
        self.element.coefficient_sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coefficients().iter().all(|c| *c >= Q::zero())
    }
}

/// Builds `M_{W,x}`. Coefficients depend only on the descent set, so they
/// are computed once per subset of the simple roots.
pub fn measure(g: &CoxeterGroup, x: Q) -> Result<Measure<'_>> {
    if x.is_zero() {
        return Err(Error::ZeroParameter);
    }
    let algebra = DescentAlgebra::new(g)?;
    let beta = algebra.beta();
    let mut weight_of_j = BTreeMap::new();
    for class in subset_equivalence_classes(g) {
        let w = pow(x, -(class.rank() as i32)) / int(class.size() as i128);
        for &j in class.members() {
            weight_of_j.insert(j, w);
        }
    }
    let by_descent: Vec<Q> = (0..1u32 << g.rank())
        .map(|d| {
            weight_of_j
                .iter()
                .map(|(&j, &w)| w * SimpleSet(j.0 & !d).subsets().map(|k| beta.get(k, j)).sum::<Q>())
                .sum()
        })
        .collect();
    let coeffs = g.elements().iter().map(|e| by_descent[e.descents.0 as usize]).collect();
    Ok(Measure { element: GroupAlgebraElement::from_coefficients(g, coeffs)?, x })
}

/// Product in `Q[W]`; the parameter of the result is `x·y`.
pub fn convolve<'g>(a: &Measure<'g>, b: &Measure<'g>) -> Result<Measure<'g>> {
    Ok(Measure { element: a.element.checked_mul(&b.element)?, x: a.x * b.x })
}

/// Probabilities of the conjugacy classes, keyed by class label.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ClassDistribution {
    entries: BTreeMap<ClassLabel, Q>,
}

impl ClassDistribution {
    pub(crate) fn from_entries(entries: BTreeMap<ClassLabel, Q>) -> Self {
        ClassDistribution { entries }
    }

    pub fn get(&self, label: &ClassLabel) -> Q {
        self.entries.get(label).copied().unwrap_or_else(Q::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&ClassLabel, &Q)> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn total(&self) -> Q {
        self.entries.values().sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries.values().all(|v| *v >= Q::zero())
    }

    /// Equal as functions on labels, treating absent labels as zero.
    pub fn agrees_with(&self, other: &ClassDistribution) -> bool {
        self.entries.keys().chain(other.entries.keys()).all(|k| self.get(k) == other.get(k))
    }
}

impl Serialize for ClassDistribution {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_map(self.entries.iter().map(|(k, v)| (k.to_string(), format_q(v))))
    }
}

impl fmt::Display for ClassDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|(k, v)| format!("{k}: {}", format_q(v))).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Sums the measure over each conjugacy class.
pub fn class_distribution(g: &CoxeterGroup, m: &Measure<'_>) -> ClassDistribution {
    let entries = g
        .conjugacy_classes()
        .iter()
        .zip(g.class_labels())
        .map(|(class, label)| (label.clone(), class.iter().map(|&w| m.coefficient(w)).sum()))
        .collect();
    ClassDistribution { entries }
}

/// `(1/2) Σ_w |m(w) - 1/|W||`.
pub fn total_variation_to_uniform(g: &CoxeterGroup, m: &Measure<'_>) -> Q {
    let u = Q::one() / int(g.order() as i128);
    m.coefficients().iter().map(|c| abs(&(c - u))).sum::<Q>() / int(2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{build_group, ConcreteForm, GroupDescriptor, Partition};
    use crate::rational::q;

    #[test]
    fn s2_at_two() {
        let s2 = build_group(GroupDescriptor::symmetric(2)).unwrap();
        let m = measure(&s2, int(2)).unwrap();
        let t = s2.longest_element();
        assert_eq!((m.coefficient(s2.identity()), m.coefficient(t)), (q(3, 4), q(1, 4)));
        assert_eq!(total_variation_to_uniform(&s2, &m), q(1, 4));
    }

    #[test]
    fn zero_parameter_rejected() {
        let s2 = build_group(GroupDescriptor::symmetric(2)).unwrap();
        assert!(matches!(measure(&s2, Q::zero()), Err(Error::ZeroParameter)));
    }

    #[test]
    fn sums_to_one() {
        for desc in [GroupDescriptor::a(3), GroupDescriptor::b(3), GroupDescriptor::d(4), GroupDescriptor::i2(5)] {
            let g = build_group(desc).unwrap();
            for x in [int(2), q(1, 2), int(-2)] {
                assert_eq!(measure(&g, x).unwrap().total(), Q::one(), "{desc} at {x}");
            }
        }
    }

    #[test]
    fn s2_convolution() {
        let s2 = build_group(GroupDescriptor::symmetric(2)).unwrap();
        let prod = convolve(&measure(&s2, int(2)).unwrap(), &measure(&s2, int(3)).unwrap()).unwrap();
        assert_eq!(prod.coefficient(s2.identity()), q(7, 12));
        assert_eq!(prod, measure(&s2, int(6)).unwrap());
        let inverse = convolve(&measure(&s2, int(5)).unwrap(), &measure(&s2, q(1, 5)).unwrap()).unwrap();
        assert_eq!(inverse.element(), &GroupAlgebraElement::one(&s2));
    }

    #[test]
    fn class_distributions() {
        let s2 = build_group(GroupDescriptor::symmetric(2)).unwrap();
        let dist = class_distribution(&s2, &measure(&s2, int(3)).unwrap());
        assert_eq!(dist.get(&ClassLabel::Partition(Partition(vec![1, 1]))), q(2, 3));
        assert_eq!(dist.get(&ClassLabel::Partition(Partition(vec![2]))), q(1, 3));

        let b1 = build_group(GroupDescriptor::b(1)).unwrap();
        let dist = class_distribution(&b1, &measure(&b1, int(3)).unwrap());
        let pos = ClassLabel::Signed { positive: Partition(vec![1]), negative: Partition::default() };
        let neg = ClassLabel::Signed { positive: Partition::default(), negative: Partition(vec![1]) };
        assert_eq!((dist.get(&pos), dist.get(&neg)), (q(2, 3), q(1, 3)));
        assert_eq!(dist.total(), Q::one());
    }

    #[test]
    fn constant_on_descent_classes() {
        let b3 = build_group(GroupDescriptor::b(3)).unwrap();
        let m = measure(&b3, int(3)).unwrap();
        let mut seen: BTreeMap<u32, Q> = BTreeMap::new();
        for (w, e) in b3.elements().iter().enumerate() {
            let c = *seen.entry(e.descents.0).or_insert(m.coefficient(w));
            assert_eq!(c, m.coefficient(w));
        }
    }

    #[test]
    fn tv_decreases_along_powers_of_two() {
        let s4 = build_group(GroupDescriptor::symmetric(4)).unwrap();
        let tvs: Vec<Q> =
            (1..=5).map(|k| total_variation_to_uniform(&s4, &measure(&s4, int(1 << k)).unwrap())).collect();
        assert!(tvs.windows(2).all(|p| p[1] <= p[0]), "{tvs:?}");
        let uniform = vec![q(1, 24); 24];
        let m = Measure { element: GroupAlgebraElement::from_coefficients(&s4, uniform).unwrap(), x: int(1) };
        assert!(total_variation_to_uniform(&s4, &m).is_zero());
    }

    #[test]
    fn large_x_approaches_uniform() {
        let g = build_group(GroupDescriptor::b(2)).unwrap();
        let x = int(1_000_000);
        let m = measure(&g, x).unwrap();
        for c in m.coefficients() {
            // |m(w) - 1/|W|| is O(1/x).
            assert!(abs(&(c - q(1, 8))) * x < int(2));
        }
        let w = g.index_of(&ConcreteForm::Signed(vec![-1, -2])).unwrap();
        assert_eq!(m.coefficient(w), longest_value(&g, x));
    }
}
