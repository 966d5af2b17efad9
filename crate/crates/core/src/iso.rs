//! Isomorphism up to relabelling, minor enumeration, and detection of the
//! excluded minors `S1..S5` and of the S4-type exchange pattern.

use std::collections::HashMap;
use std::sync::OnceLock;

use crate::bits::{bit, ones, submasks};
use crate::error::{Error, Result};
use crate::system::{permute_mask, DeltaMatroid, Extremal, Mask, SetSystem};

/// Largest ground set accepted by [`canonical_form`].
pub const ISO_CAP: usize = 10;

/// Ground-set size followed by the lexicographically least sorted family over
/// all relabellings, each mask big-endian so byte order matches mask order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    fn encode(n: usize, family: &[Mask]) -> Self {
        let mut bytes = Vec::with_capacity(1 + 4 * family.len());
        bytes.push(n as u8);
        for m in family {
            bytes.extend_from_slice(&m.to_be_bytes());
        }
        CanonicalForm(bytes)
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn ground_size(&self) -> usize {
        self.0[0] as usize
    }

    pub fn masks(&self) -> impl Iterator<Item = Mask> + '_ {
        self.0[1..]
            .chunks_exact(4)
            .map(|c| Mask::from_be_bytes([c[0], c[1], c[2], c[3]]))
    }
}

/// For each element, how many feasible sets of each size contain it.
fn element_profiles(n: usize, family: &[Mask]) -> Vec<Vec<u32>> {
    let mut prof = vec![vec![0u32; n + 1]; n];
    for &m in family {
        let size = m.count_ones() as usize;
        for e in ones(m) {
            prof[e][size] += 1;
        }
    }
    prof
}

/// Minimum over the relabellings that keep elements with equal size profiles
/// together. Isomorphisms preserve profiles, so this is a canonical form.
pub fn canonical_form(s: &SetSystem) -> Result<CanonicalForm> {
    let n = s.len();
    if n > ISO_CAP {
        return Err(Error::IsoCapExceeded { n, cap: ISO_CAP });
    }
    let prof = element_profiles(n, s.feasible());
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| prof[a].cmp(&prof[b]));
    // slot p may only receive elements whose profile equals that of order[p]
    let slot_class: Vec<&Vec<u32>> = order.iter().map(|&e| &prof[e]).collect();

    let mut search = PermSearch {
        family: s.feasible(),
        prof: &prof,
        slot_class: &slot_class,
        perm: vec![0; n],
        used: 0,
        scratch: Vec::with_capacity(s.feasible().len()),
        best: None,
    };
    search.run(0);
    Ok(CanonicalForm::encode(n, &search.best.unwrap_or_default()))
}

struct PermSearch<'a> {
    family: &'a [Mask],
    prof: &'a [Vec<u32>],
    slot_class: &'a [&'a Vec<u32>],
    perm: Vec<usize>,
    used: Mask,
    scratch: Vec<Mask>,
    best: Option<Vec<Mask>>,
}

impl PermSearch<'_> {
    fn run(&mut self, slot: usize) {
        let n = self.perm.len();
        if slot == n {
            self.scratch.clear();
            self.scratch
                .extend(self.family.iter().map(|&m| permute_mask(m, &self.perm)));
            self.scratch.sort_unstable();
            match &mut self.best {
                Some(b) if *b <= self.scratch => {}
                Some(b) => b.clone_from(&self.scratch),
                None => self.best = Some(self.scratch.clone()),
            }
            return;
        }
        for e in 0..n {
            if self.used & bit(e) == 0 && &self.prof[e] == self.slot_class[slot] {
                self.used |= bit(e);
                self.perm[e] = slot;
                self.run(slot + 1);
                self.used &= !bit(e);
            }
        }
    }
}

fn size_histogram(s: &SetSystem) -> Vec<usize> {
    let mut h = vec![0; s.len() + 1];
    for m in s.feasible() {
        h[m.count_ones() as usize] += 1;
    }
    h
}

pub fn is_isomorphic(a: &SetSystem, b: &SetSystem) -> Result<bool> {
    if a.len() != b.len()
        || a.feasible().len() != b.feasible().len()
        || size_histogram(a) != size_histogram(b)
    {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

/// One minor `D \ deleted / contracted`.
#[derive(Clone, Debug)]
pub struct Minor {
    pub deleted: Mask,
    pub contracted: Mask,
    pub minor: DeltaMatroid,
}

/// Every minor of `d`, one per disjoint pair `(deleted, contracted)`.
pub fn minors(d: &DeltaMatroid) -> impl Iterator<Item = Minor> + '_ {
    let ground = d.ground();
    submasks(ground).flat_map(move |deleted| {
        submasks(ground & !deleted).map(move |contracted| Minor {
            deleted,
            contracted,
            minor: d.minor(deleted, contracted),
        })
    })
}

/// The five excluded minors for binary delta-matroids and the canonical forms
/// of all their twists.
pub struct ExcludedMinorTable {
    systems: [DeltaMatroid; 5],
    twists: HashMap<CanonicalForm, (usize, Mask)>,
}

const EXCLUDED: [(usize, &[&[usize]]); 5] = [
    (3, &[&[], &[1, 2], &[1, 3], &[2, 3], &[1, 2, 3]]),
    (3, &[&[], &[1], &[2], &[3], &[1, 2], &[1, 3], &[2, 3]]),
    (3, &[&[], &[2], &[3], &[1, 2], &[1, 3], &[1, 2, 3]]),
    (
        4,
        &[&[], &[1, 2], &[1, 3], &[1, 4], &[2, 3], &[2, 4], &[3, 4]],
    ),
    (4, &[&[], &[1, 2], &[1, 4], &[2, 3], &[3, 4], &[1, 2, 3, 4]]),
];

impl ExcludedMinorTable {
    fn build() -> Self {
        let systems = EXCLUDED.map(|(n, sets)| {
            let masks = sets
                .iter()
                .map(|s| s.iter().fold(0, |acc, &e| acc | bit(e - 1)));
            let sys = SetSystem::from_masks(n, masks).expect("well-formed listing");
            crate::system::validate_sea(sys).expect("excluded minors are delta-matroids")
        });
        let mut twists = HashMap::new();
        for (i, s) in systems.iter().enumerate() {
            for b in submasks(s.ground()) {
                let form = canonical_form(&s.twist(b)).expect("small ground set");
                twists.entry(form).or_insert((i + 1, b));
            }
        }
        Self { systems, twists }
    }

    pub fn get() -> &'static ExcludedMinorTable {
        static TABLE: OnceLock<ExcludedMinorTable> = OnceLock::new();
        TABLE.get_or_init(Self::build)
    }

    /// `S_i` for `i` in `1..=5`.
    pub fn system(&self, i: usize) -> &DeltaMatroid {
        &self.systems[i - 1]
    }

    pub fn systems(&self) -> &[DeltaMatroid; 5] {
        &self.systems
    }

    /// `(i, B)` such that `s` is isomorphic to `S_i * B`, if any.
    pub fn lookup(&self, s: &SetSystem) -> Option<(usize, Mask)> {
        if !(3..=4).contains(&s.len()) {
            return None;
        }
        let form = canonical_form(s).ok()?;
        self.twists.get(&form).copied()
    }

    pub fn len(&self) -> usize {
        self.twists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.twists.is_empty()
    }
}

/// `S_i` for `i` in `1..=5`, on elements labelled `1..=3` or `1..=4`.
pub fn excluded_minor(i: usize) -> DeltaMatroid {
    assert!((1..=5).contains(&i), "excluded minors are S1..S5");
    ExcludedMinorTable::get().system(i).clone()
}

/// `D \ deleted / contracted` is isomorphic to `S_index * twist`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ExcludedMinorWitness {
    pub deleted: Mask,
    pub contracted: Mask,
    pub index: usize,
    pub twist: Mask,
}

/// Looks for a minor on three or four elements isomorphic to a twist of some `S_i`.
pub fn contains_excluded_minor(d: &DeltaMatroid) -> Option<ExcludedMinorWitness> {
    let table = ExcludedMinorTable::get();
    let n = d.len();
    if n < 3 {
        return None;
    }
    let ground = d.ground();
    for deleted in submasks(ground) {
        let rest = ground & !deleted;
        for contracted in submasks(rest) {
            let remaining = n - (deleted | contracted).count_ones() as usize;
            if !(3..=4).contains(&remaining) {
                continue;
            }
            let m = d.minor(deleted, contracted);
            if let Some((index, twist)) = table.lookup(&m) {
                return Some(ExcludedMinorWitness {
                    deleted,
                    contracted,
                    index,
                    twist,
                });
            }
        }
    }
    None
}

/// Six feasible sets `F`, `F Δ {x1,y1}`, `F Δ {x2,y2}`, `F Δ {x1,y2}`,
/// `F Δ {x2,y1}` and `F Δ {x1,y1,x2,y2}` with `x1, x2 ∈ F` and `y1, y2 ∉ F`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct S4Pattern {
    pub base: Mask,
    pub x1: usize,
    pub x2: usize,
    pub y1: usize,
    pub y2: usize,
}

impl S4Pattern {
    pub fn sets(&self) -> [Mask; 6] {
        let f = self.base;
        let (x1, x2, y1, y2) = (bit(self.x1), bit(self.x2), bit(self.y1), bit(self.y2));
        [
            f,
            f ^ x1 ^ y1,
            f ^ x2 ^ y2,
            f ^ x1 ^ y2,
            f ^ x2 ^ y1,
            f ^ x1 ^ y1 ^ x2 ^ y2,
        ]
    }

    pub fn holds_in(&self, s: &SetSystem) -> bool {
        let f = self.base;
        let inside = |e: usize| f & bit(e) != 0;
        self.x1 != self.x2
            && self.y1 != self.y2
            && inside(self.x1)
            && inside(self.x2)
            && !inside(self.y1)
            && !inside(self.y2)
            && self.sets().iter().all(|&m| s.contains(m))
    }
}

/// Finds an S4-type pattern, trying bases of the upper matroid as `F` first.
pub fn find_s4_pattern(d: &DeltaMatroid) -> Option<S4Pattern> {
    if d.feasible().len() < 6 {
        return None;
    }
    let upper = d.extremal_matroid(Extremal::Upper);
    let rest = d
        .feasible()
        .iter()
        .copied()
        .filter(|m| upper.binary_search(m).is_err());
    let ground = d.ground();
    upper.iter().copied().chain(rest).find_map(|f| {
        let inside: Vec<usize> = ones(f).collect();
        let outside: Vec<usize> = ones(ground & !f).collect();
        for (a, &x1) in inside.iter().enumerate() {
            for &x2 in &inside[a + 1..] {
                for (b, &y1) in outside.iter().enumerate() {
                    for &y2 in &outside[b + 1..] {
                        let p = S4Pattern {
                            base: f,
                            x1,
                            x2,
                            y1,
                            y2,
                        };
                        if p.sets().iter().all(|&m| d.contains(m)) {
                            return Some(p);
                        }
                    }
                }
            }
        }
        None
    })
}
