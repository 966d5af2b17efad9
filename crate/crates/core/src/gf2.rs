//! Symmetric matrices over GF(2), the delta-matroid `D(A)` of invertible
//! principal submatrices, and binary representability.

use std::fmt;

use crate::bits::{bit, full, ones, submasks};
use crate::error::{Error, Result};
use crate::iso;
use crate::system::{DeltaMatroid, Mask, SetSystem};

/// Symmetric `n x n` matrix over GF(2); row `i` is packed into one word.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gf2SymMatrix {
    rows: Vec<Mask>,
}

impl Gf2SymMatrix {
    pub fn zeros(n: usize) -> Self {
        assert!(n <= crate::MAX_ELEMENTS);
        Self { rows: vec![0; n] }
    }

    /// Builds from packed rows; fails if the rows are not symmetric.
    pub fn from_rows(rows: Vec<Mask>) -> Result<Self> {
        let n = rows.len();
        if n > crate::MAX_ELEMENTS {
            return Err(Error::TooManyElements(n));
        }
        for (i, &r) in rows.iter().enumerate() {
            if r & !full(n) != 0 {
                return Err(Error::MaskOutOfRange { mask: r, n });
            }
            for j in ones(r) {
                if rows[j] & bit(i) == 0 {
                    return Err(Error::Parse(format!(
                        "matrix is not symmetric at ({i}, {j})"
                    )));
                }
            }
        }
        Ok(Self { rows })
    }

    pub fn from_entries(entries: &[&[u8]]) -> Result<Self> {
        let rows = entries
            .iter()
            .map(|row| {
                row.iter().enumerate().fold(
                    0,
                    |acc, (j, &v)| if v & 1 == 1 { acc | bit(j) } else { acc },
                )
            })
            .collect();
        Self::from_rows(rows)
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Mask] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i] & bit(j) != 0
    }

    /// Sets `(i, j)` and `(j, i)`.
    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        if value {
            self.rows[i] |= bit(j);
            self.rows[j] |= bit(i);
        } else {
            self.rows[i] &= !bit(j);
            self.rows[j] &= !bit(i);
        }
    }

    pub fn rank(&self) -> usize {
        self.principal_rank(full(self.dim()))
    }

    /// Rank of the principal submatrix on the index set `w`.
    pub fn principal_rank(&self, w: Mask) -> usize {
        rank_of_rows(ones(w).map(|i| self.rows[i] & w))
    }

    /// The empty principal submatrix counts as invertible.
    pub fn is_principal_invertible(&self, w: Mask) -> bool {
        self.principal_rank(w) == w.count_ones() as usize
    }
}

impl fmt::Debug for Gf2SymMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.dim();
        let rows: Vec<String> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if self.get(i, j) { '1' } else { '0' })
                    .collect()
            })
            .collect();
        write!(f, "[{}]", rows.join(" "))
    }
}

impl fmt::Display for Gf2SymMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Rank over GF(2) of a list of packed rows, by insertion into an echelon basis
/// keyed by leading bit.
pub fn rank_of_rows(rows: impl IntoIterator<Item = Mask>) -> usize {
    let mut basis = [0 as Mask; 32];
    let mut rank = 0;
    for mut r in rows {
        while r != 0 {
            let lead = 31 - r.leading_zeros() as usize;
            if basis[lead] == 0 {
                basis[lead] = r;
                rank += 1;
                break;
            }
            r ^= basis[lead];
        }
    }
    rank
}

/// Feasible sets of `D(A)`: all index sets whose principal submatrix is invertible.
pub fn invertible_family(a: &Gf2SymMatrix) -> Vec<Mask> {
    let mut family: Vec<Mask> = submasks(full(a.dim()))
        .filter(|&w| a.is_principal_invertible(w))
        .collect();
    family.sort_unstable();
    family
}

/// `D(A)` on elements labelled `1..=n`.
pub fn matroid_from_matrix(a: &Gf2SymMatrix) -> DeltaMatroid {
    let sys = SetSystem::from_masks(a.dim(), invertible_family(a))
        .expect("invertible family is non-empty and in range");
    DeltaMatroid::trusted(sys)
}

/// The only matrix that could represent a normal set system, forced by its
/// feasible singletons and pairs. Larger sets are not checked.
pub fn infer_matrix(d: &SetSystem) -> Result<Gf2SymMatrix> {
    if !d.is_normal() {
        return Err(Error::NotNormal);
    }
    let n = d.len();
    let mut a = Gf2SymMatrix::zeros(n);
    for v in 0..n {
        a.set(v, v, d.contains(bit(v)));
    }
    for v in 0..n {
        for w in v + 1..n {
            let diag = a.get(v, v) & a.get(w, w);
            let entry = if d.contains(bit(v) | bit(w)) {
                !diag
            } else {
                diag
            };
            a.set(v, w, entry);
        }
    }
    Ok(a)
}

/// True iff `D(a)` has exactly the feasible sets of `d`.
fn represents(a: &Gf2SymMatrix, d: &SetSystem) -> bool {
    let index = crate::bits::FamilyIndex::new(d.len(), d.feasible());
    let mut count = 0usize;
    for w in submasks(d.ground()) {
        let inv = a.is_principal_invertible(w);
        if inv != index.contains(w) {
            return false;
        }
        count += inv as usize;
    }
    count == d.feasible().len()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BinaryMethod {
    Matrix,
    ExcludedMinor,
    Both,
}

/// Evidence behind a binary verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BinaryWitness {
    /// `D = D(matrix) * twist`.
    Representation { twist: Mask, matrix: Gf2SymMatrix },
    /// `D \ deleted / contracted` is isomorphic to `S_index * twist`.
    ExcludedMinor(iso::ExcludedMinorWitness),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryVerdict {
    pub binary: bool,
    pub witness: Option<BinaryWitness>,
}

/// Searches for a feasible `F` and matrix `A` with `D * F = D(A)`.
pub fn binary_representation(d: &SetSystem) -> Option<(Mask, Gf2SymMatrix)> {
    d.feasible().iter().find_map(|&f| {
        let normal = d.twist(f);
        let a = infer_matrix(&normal).expect("twist by a feasible set is normal");
        represents(&a, &normal).then_some((f, a))
    })
}

pub fn is_binary(d: &DeltaMatroid, method: BinaryMethod) -> Result<BinaryVerdict> {
    let by_matrix = || {
        let rep = binary_representation(d);
        BinaryVerdict {
            binary: rep.is_some(),
            witness: rep.map(|(twist, matrix)| BinaryWitness::Representation { twist, matrix }),
        }
    };
    let by_minor = || {
        let hit = iso::contains_excluded_minor(d);
        BinaryVerdict {
            binary: hit.is_none(),
            witness: hit.map(BinaryWitness::ExcludedMinor),
        }
    };
    match method {
        BinaryMethod::Matrix => Ok(by_matrix()),
        BinaryMethod::ExcludedMinor => Ok(by_minor()),
        BinaryMethod::Both => {
            let m = by_matrix();
            let x = by_minor();
            if m.binary != x.binary {
                return Err(Error::MethodDisagreement {
                    matrix: m.binary,
                    minor: x.binary,
                });
            }
            Ok(if m.binary { m } else { x })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::system::validate_sea;

    #[test]
    fn ranks() {
        let a = Gf2SymMatrix::from_entries(&[&[0, 1], &[1, 0]]).unwrap();
        assert_eq!(a.rank(), 2);
        let b = Gf2SymMatrix::from_entries(&[&[0, 1, 1], &[1, 0, 1], &[1, 1, 0]]).unwrap();
        assert_eq!(b.rank(), 2);
        assert_eq!(b.principal_rank(0), 0);
        assert!(b.is_principal_invertible(0));
        assert!(Gf2SymMatrix::from_entries(&[&[0, 1], &[0, 0]]).is_err());
    }

    #[test]
    fn small_matrices() {
        let one = Gf2SymMatrix::from_entries(&[&[1]]).unwrap();
        assert_eq!(matroid_from_matrix(&one).feasible(), &[0, 1]);
        let zero = Gf2SymMatrix::from_entries(&[&[0]]).unwrap();
        assert_eq!(matroid_from_matrix(&zero).feasible(), &[0]);
        let swap = Gf2SymMatrix::from_entries(&[&[0, 1], &[1, 0]]).unwrap();
        assert_eq!(matroid_from_matrix(&swap).feasible(), &[0, 0b11]);
    }

    fn d3() -> SetSystem {
        SetSystem::from_masks(3, [0, 0b011, 0b101, 0b110]).unwrap()
    }

    #[test]
    fn inferred_candidates() {
        let all_ones = Gf2SymMatrix::from_entries(&[&[0, 1, 1], &[1, 0, 1], &[1, 1, 0]]).unwrap();
        assert_eq!(infer_matrix(&d3()).unwrap(), all_ones);
        let single = SetSystem::from_masks(1, [0, 1]).unwrap();
        assert_eq!(
            infer_matrix(&single).unwrap(),
            Gf2SymMatrix::from_entries(&[&[1]]).unwrap()
        );
        let s1 = SetSystem::from_masks(3, [0, 0b011, 0b101, 0b110, 0b111]).unwrap();
        assert_eq!(infer_matrix(&s1).unwrap(), all_ones);
        assert!(!represents(&all_ones, &s1));
        let not_normal = SetSystem::from_masks(1, [1]).unwrap();
        assert_eq!(infer_matrix(&not_normal).unwrap_err(), Error::NotNormal);
    }

    #[test]
    fn binary_verdicts() {
        let d3 = validate_sea(d3()).unwrap();
        let v = is_binary(&d3, BinaryMethod::Both).unwrap();
        assert!(v.binary);
        let all_ones = Gf2SymMatrix::from_entries(&[&[0, 1, 1], &[1, 0, 1], &[1, 1, 0]]).unwrap();
        assert_eq!(
            v.witness,
            Some(BinaryWitness::Representation {
                twist: 0,
                matrix: all_ones
            })
        );
        let pair = validate_sea(SetSystem::from_masks(2, [0, 0b11]).unwrap()).unwrap();
        let v = is_binary(&pair, BinaryMethod::Matrix).unwrap();
        assert_eq!(
            v.witness,
            Some(BinaryWitness::Representation {
                twist: 0,
                matrix: Gf2SymMatrix::from_entries(&[&[0, 1], &[1, 0]]).unwrap()
            })
        );
        let s4 = validate_sea(
            SetSystem::from_masks(4, [0, 0b0011, 0b0101, 0b1001, 0b0110, 0b1010, 0b1100]).unwrap(),
        )
        .unwrap();
        for m in [
            BinaryMethod::Matrix,
            BinaryMethod::ExcludedMinor,
            BinaryMethod::Both,
        ] {
            assert!(!is_binary(&s4, m).unwrap().binary);
        }
    }
}
