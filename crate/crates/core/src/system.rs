//! Set systems, the symmetric exchange axiom, and the first-order
//! delta-matroid operations: twist, dual, elementary minors, width,
//! parity and the extremal matroids.

use std::collections::HashSet;
use std::fmt;
use std::ops::Deref;
use std::sync::Arc;

use crate::bits::{bit, compress, full, ones, FamilyIndex};
use crate::error::{Error, Result};

/// A subset of the ground set, one bit per element index.
pub type Mask = u32;

/// Hard cap on the ground-set size.
pub const MAX_ELEMENTS: usize = 30;

/// A finite ground set of labelled elements with a family of feasible subsets.
///
/// The family is kept sorted ascending by mask value and free of duplicates,
/// so structural equality is family equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SetSystem {
    elements: Arc<[String]>,
    feasible: Vec<Mask>,
}

impl SetSystem {
    /// Builds a set system from labels and masks. Duplicate masks are rejected.
    pub fn new<I, S>(elements: I, feasible: impl IntoIterator<Item = Mask>) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let elements: Vec<String> = elements.into_iter().map(Into::into).collect();
        let n = elements.len();
        if n > MAX_ELEMENTS {
            return Err(Error::TooManyElements(n));
        }
        let mut seen = HashSet::with_capacity(n);
        for label in &elements {
            if !seen.insert(label.as_str()) {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        let ground = full(n);
        let mut family: Vec<Mask> = feasible.into_iter().collect();
        if family.is_empty() {
            return Err(Error::EmptyFamily);
        }
        if let Some(&bad) = family.iter().find(|&&m| m & !ground != 0) {
            return Err(Error::MaskOutOfRange { mask: bad, n });
        }
        family.sort_unstable();
        if let Some(w) = family.windows(2).find(|w| w[0] == w[1]) {
            let dup = w[0];
            let sys = Self::from_parts(elements.into(), vec![dup]);
            return Err(Error::DuplicateFeasible(sys.format_set(dup)));
        }
        Ok(Self::from_parts(elements.into(), family))
    }

    /// Builds a set system on elements labelled `1..=n`.
    pub fn from_masks(n: usize, feasible: impl IntoIterator<Item = Mask>) -> Result<Self> {
        Self::new(default_labels(n), feasible)
    }

    /// Builds a set system from feasible sets written as label lists.
    pub fn from_label_sets<S: AsRef<str>>(elements: &[S], sets: &[&[S]]) -> Result<Self> {
        let labels: Vec<String> = elements.iter().map(|s| s.as_ref().to_owned()).collect();
        let probe = Self::from_parts(labels.clone().into(), vec![0]);
        let masks = sets
            .iter()
            .map(|set| probe.mask_of(set.iter().map(AsRef::as_ref)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(labels, masks)
    }

    /// Caller guarantees `feasible` is sorted, deduplicated, non-empty and in range.
    pub(crate) fn from_parts(elements: Arc<[String]>, feasible: Vec<Mask>) -> Self {
        debug_assert!(feasible.windows(2).all(|w| w[0] < w[1]));
        Self { elements, feasible }
    }

    /// Number of elements in the ground set.
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn feasible(&self) -> &[Mask] {
        &self.feasible
    }

    pub fn ground(&self) -> Mask {
        full(self.len())
    }

    pub fn contains(&self, set: Mask) -> bool {
        self.feasible.binary_search(&set).is_ok()
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.elements
            .iter()
            .position(|e| e == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_owned()))
    }

    /// Converts labels to a mask, failing on the first unknown label.
    pub fn mask_of<'a>(&self, labels: impl IntoIterator<Item = &'a str>) -> Result<Mask> {
        labels
            .into_iter()
            .try_fold(0, |acc, l| Ok(acc | bit(self.index_of(l)?)))
    }

    pub fn labels_of(&self, set: Mask) -> Vec<&str> {
        ones(set).map(|i| self.elements[i].as_str()).collect()
    }

    /// Renders a subset as `{1,2}`.
    pub fn format_set(&self, set: Mask) -> String {
        format!("{{{}}}", self.labels_of(set).join(","))
    }

    /// Replaces every feasible set `X` by `A Δ X`.
    pub fn twist(&self, a: Mask) -> SetSystem {
        let mut family: Vec<Mask> = self.feasible.iter().map(|&x| x ^ a).collect();
        family.sort_unstable();
        Self::from_parts(self.elements.clone(), family)
    }

    pub fn width_profile(&self) -> WidthProfile {
        let (lo, hi) = size_range(&self.feasible);
        WidthProfile {
            r_min: lo,
            r_max: hi,
            width: hi - lo,
        }
    }

    pub fn parity(&self) -> Parity {
        let first = self.feasible[0].count_ones() & 1;
        if self.feasible.iter().all(|m| m.count_ones() & 1 == first) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn is_even(&self) -> bool {
        self.parity() == Parity::Even
    }

    pub fn is_normal(&self) -> bool {
        self.feasible[0] == 0
    }

    /// Relabels the ground set: element `i` moves to index `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> SetSystem {
        assert_eq!(perm.len(), self.len());
        let mut labels = vec![String::new(); self.len()];
        for (i, &p) in perm.iter().enumerate() {
            labels[p] = self.elements[i].clone();
        }
        let mut family: Vec<Mask> = self
            .feasible
            .iter()
            .map(|&m| permute_mask(m, perm))
            .collect();
        family.sort_unstable();
        Self::from_parts(labels.into(), family)
    }

    /// Keeps only the elements in `keep`, re-indexing them in order.
    /// Every feasible set must already lie inside `keep`.
    pub(crate) fn restrict(&self, keep: Mask, family: &[Mask]) -> SetSystem {
        let labels: Vec<String> = ones(keep).map(|i| self.elements[i].clone()).collect();
        let mut packed: Vec<Mask> = family.iter().map(|&m| compress(m, keep)).collect();
        packed.sort_unstable();
        packed.dedup();
        Self::from_parts(labels.into(), packed)
    }
}

impl fmt::Debug for SetSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sets: Vec<String> = self.feasible.iter().map(|&m| self.format_set(m)).collect();
        write!(
            f,
            "({{{}}}, {{{}}})",
            self.elements.join(","),
            sets.join(", ")
        )
    }
}

impl fmt::Display for SetSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

pub(crate) fn default_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

pub(crate) fn permute_mask(m: Mask, perm: &[usize]) -> Mask {
    ones(m).fold(0, |acc, i| acc | bit(perm[i]))
}

fn size_range(family: &[Mask]) -> (usize, usize) {
    family
        .iter()
        .map(|m| m.count_ones() as usize)
        .fold((usize::MAX, 0), |(lo, hi), c| (lo.min(c), hi.max(c)))
}

/// A failed instance of the symmetric exchange axiom: no `y` in `F1 Δ F2`
/// makes `F1 Δ {x, y}` feasible.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SeaViolation {
    pub f1: Mask,
    pub f2: Mask,
    pub x: usize,
}

impl SeaViolation {
    pub fn describe(&self, sys: &SetSystem) -> String {
        format!(
            "F1={} F2={} x={}",
            sys.format_set(self.f1),
            sys.format_set(self.f2),
            sys.elements()[self.x]
        )
    }
}

/// Rejected input to [`validate_sea`], carrying the set system back.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NotADeltaMatroid {
    pub system: SetSystem,
    pub violation: SeaViolation,
}

impl fmt::Display for NotADeltaMatroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "symmetric exchange fails: {}",
            self.violation.describe(&self.system)
        )
    }
}

impl std::error::Error for NotADeltaMatroid {}

/// Finds the first SEA violation of a sorted family on `n` elements, scanning
/// `F1`, `F2` in family order and `x` in ascending index order.
pub fn find_sea_violation(n: usize, family: &[Mask]) -> Option<SeaViolation> {
    let index = FamilyIndex::new(n, family);
    for &f1 in family {
        for &f2 in family {
            let diff = f1 ^ f2;
            for x in ones(diff) {
                let bx = bit(x);
                if !ones(diff).any(|y| index.contains(f1 ^ (bx | bit(y)))) {
                    return Some(SeaViolation { f1, f2, x });
                }
            }
        }
    }
    None
}

/// Checks the symmetric exchange axiom and returns the validated delta-matroid.
pub fn validate_sea(system: SetSystem) -> std::result::Result<DeltaMatroid, NotADeltaMatroid> {
    match find_sea_violation(system.len(), &system.feasible) {
        None => Ok(DeltaMatroid(system)),
        Some(violation) => Err(NotADeltaMatroid { system, violation }),
    }
}

/// Minimum and maximum feasible cardinalities of a delta-matroid.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct WidthProfile {
    pub r_min: usize,
    pub r_max: usize,
    pub width: usize,
}

impl fmt::Display for WidthProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "r_min={} r_max={} width={}",
            self.r_min, self.r_max, self.width
        )
    }
}

/// `Even` when all feasible sets have the same cardinality parity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MinorKind {
    Delete,
    Contract,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Extremal {
    Upper,
    Lower,
}

/// One elementary minor step on a family kept in the original index space.
///
/// A loop is always deleted and a coloop always contracted, whatever `kind`
/// asks for, so that `D/e = D-e` in those cases.
pub(crate) fn minor_step(family: &[Mask], e: usize, kind: MinorKind) -> Vec<Mask> {
    let b = bit(e);
    let with_e = family.iter().filter(|&&m| m & b != 0).count();
    let effective = if with_e == 0 {
        MinorKind::Delete
    } else if with_e == family.len() {
        MinorKind::Contract
    } else {
        kind
    };
    match effective {
        MinorKind::Delete => family.iter().copied().filter(|&m| m & b == 0).collect(),
        MinorKind::Contract => family
            .iter()
            .filter(|&&m| m & b != 0)
            .map(|&m| m & !b)
            .collect(),
    }
}

/// A set system that satisfies the symmetric exchange axiom.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DeltaMatroid(SetSystem);

impl Deref for DeltaMatroid {
    type Target = SetSystem;

    fn deref(&self) -> &SetSystem {
        &self.0
    }
}

impl fmt::Debug for DeltaMatroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(&self.0, f)
    }
}

impl fmt::Display for DeltaMatroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl DeltaMatroid {
    /// Wraps a set system known to satisfy SEA; checked in debug builds.
    pub(crate) fn trusted(system: SetSystem) -> Self {
        debug_assert!(
            find_sea_violation(system.len(), system.feasible()).is_none(),
            "operation produced a non-delta-matroid: {system:?}"
        );
        DeltaMatroid(system)
    }

    pub fn as_set_system(&self) -> &SetSystem {
        &self.0
    }

    pub fn into_set_system(self) -> SetSystem {
        self.0
    }

    pub fn twist(&self, a: Mask) -> DeltaMatroid {
        assert!(a & !self.ground() == 0, "twist set outside ground set");
        Self::trusted(self.0.twist(a))
    }

    pub fn twist_labels<'a>(&self, labels: impl IntoIterator<Item = &'a str>) -> Result<Self> {
        Ok(self.twist(self.mask_of(labels)?))
    }

    pub fn dual(&self) -> DeltaMatroid {
        self.twist(self.ground())
    }

    pub fn elementary_minor(&self, e: usize, kind: MinorKind) -> DeltaMatroid {
        assert!(e < self.len(), "element index out of range");
        let family = minor_step(self.feasible(), e, kind);
        Self::trusted(self.0.restrict(self.ground() & !bit(e), &family))
    }

    /// `D \ deleted / contracted`: deletions first, then contractions, each in
    /// ascending index order.
    pub fn minor(&self, deleted: Mask, contracted: Mask) -> DeltaMatroid {
        assert!(
            deleted & contracted == 0,
            "deleted and contracted sets overlap"
        );
        assert!((deleted | contracted) & !self.ground() == 0);
        let steps = ones(deleted)
            .map(|e| (e, MinorKind::Delete))
            .chain(ones(contracted).map(|e| (e, MinorKind::Contract)));
        self.minor_sequence(steps)
    }

    /// Applies elementary minor steps in the given order.
    pub fn minor_sequence(&self, steps: impl IntoIterator<Item = (usize, MinorKind)>) -> Self {
        let mut family = self.feasible().to_vec();
        let mut keep = self.ground();
        for (e, kind) in steps {
            assert!(keep & bit(e) != 0, "element {e} removed twice");
            family = minor_step(&family, e, kind);
            keep &= !bit(e);
        }
        Self::trusted(self.0.restrict(keep, &family))
    }

    /// Elements in no feasible set, and elements in every feasible set.
    pub fn loops_and_coloops(&self) -> (Mask, Mask) {
        let union = self.feasible().iter().fold(0, |a, &m| a | m);
        let inter = self.feasible().iter().fold(self.ground(), |a, &m| a & m);
        (self.ground() & !union, inter)
    }

    /// Bases of the upper (largest feasible sets) or lower (smallest) matroid.
    pub fn extremal_matroid(&self, which: Extremal) -> Vec<Mask> {
        let p = self.width_profile();
        let size = match which {
            Extremal::Upper => p.r_max,
            Extremal::Lower => p.r_min,
        };
        self.feasible()
            .iter()
            .copied()
            .filter(|m| m.count_ones() as usize == size)
            .collect()
    }

    /// Deletes every element that lies in no feasible set.
    pub fn trim_unused(&self) -> DeltaMatroid {
        let (loops, _) = self.loops_and_coloops();
        if loops == 0 {
            return self.clone();
        }
        Self::trusted(self.0.restrict(self.ground() & !loops, self.feasible()))
    }

    pub fn permute(&self, perm: &[usize]) -> DeltaMatroid {
        DeltaMatroid(self.0.permute(perm))
    }
}

impl TryFrom<SetSystem> for DeltaMatroid {
    type Error = NotADeltaMatroid;

    fn try_from(s: SetSystem) -> std::result::Result<Self, Self::Error> {
        validate_sea(s)
    }
}
