//! Code surgeries: projection away from a word's support, shortening,
//! hyperplane subcodes and span extension.

use crate::codes::LinearCode;
use crate::error::{Error, Result};
use crate::gf2::{Gf2Matrix, Gf2Vector};

/// Weight of the projection of `v` away from `Supp(w)`, from the three
/// weights `|v|`, `|v + w|` and `|w|`.
///
/// With `r = |Supp(v) ∩ Supp(w)|` one has `|v| = r + |π(v)|` and
/// `|v| + |w| = |v + w| + 2r`.
pub fn projected_weight(wv: u64, wvw: u64, ww: u64) -> Result<u64> {
    let unrealizable = || Error::UnrealizableWeights { wv, wvw, ww };
    let sum = (wv + wvw).checked_sub(ww).ok_or_else(unrealizable)?;
    if sum % 2 != 0 {
        return Err(unrealizable());
    }
    Ok(sum / 2)
}

/// Result of projecting a code away from the support of one of its words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Projection {
    pub code: LinearCode,
    /// Dimension of the kernel of the projection restricted to the code,
    /// i.e. of the codewords supported inside `Supp(w)`.
    pub kernel_dimension: usize,
}

/// Projects `code` onto the coordinates outside `Supp(w)`, keeping their
/// relative order.
pub fn project(code: &LinearCode, w: &Gf2Vector) -> Result<LinearCode> {
    Ok(project_with_kernel(code, w)?.code)
}

pub fn project_with_kernel(code: &LinearCode, w: &Gf2Vector) -> Result<Projection> {
    check_nonzero_member(code, w)?;
    let keep: Vec<bool> = (0..w.len()).map(|i| !w.get(i)).collect();
    let image = code.delete_coordinates(&keep);
    Ok(Projection {
        kernel_dimension: code.dimension() - image.dimension(),
        code: image,
    })
}

/// Projection of a single word away from `Supp(w)`.
pub fn project_word(v: &Gf2Vector, w: &Gf2Vector) -> Result<Gf2Vector> {
    if v.len() != w.len() {
        return Err(Error::LengthMismatch {
            expected: w.len(),
            found: v.len(),
        });
    }
    let keep: Vec<bool> = (0..w.len()).map(|i| !w.get(i)).collect();
    v.restrict(&keep)
}

/// Whether `w` is a sum of two disjoint nonzero codewords, by enumeration.
///
/// Such a split exists iff some codeword other than `0` and `w` has support
/// inside `Supp(w)`.
pub fn has_disjoint_decomposition(code: &LinearCode, w: &Gf2Vector, cap: usize) -> Result<bool> {
    check_nonzero_member(code, w)?;
    Ok(code.codewords(cap)?.iter().any(|v| {
        !v.is_zero() && v != w && v.intersection_weight(w).expect("same length") == v.weight()
    }))
}

/// Subcode of words vanishing on `coords`, with those coordinates deleted.
pub fn shorten(code: &LinearCode, coords: &[usize]) -> Result<LinearCode> {
    let n = code.ambient_length();
    let mut in_z = vec![false; n];
    for &i in coords {
        if i >= n {
            return Err(Error::CoordinateOutOfRange { index: i, n });
        }
        in_z[i] = true;
    }
    let avoiding = vanishing_subcode(code, &in_z);
    let keep: Vec<bool> = in_z.iter().map(|&z| !z).collect();
    Ok(avoiding.delete_coordinates(&keep))
}

/// Subcode of words vanishing on the marked coordinates, in the same ambient
/// space.
pub fn vanishing_subcode(code: &LinearCode, marked: &[bool]) -> LinearCode {
    let rows = code.generator().rows();
    let d = rows.len();
    // Column j of `restricted` lists the marked bits of generator row j.
    let z_coords: Vec<usize> = (0..marked.len()).filter(|&i| marked[i]).collect();
    let restricted_rows = z_coords
        .iter()
        .map(|&c| {
            let bits: Vec<bool> = rows.iter().map(|r| r.get(c)).collect();
            Gf2Vector::from_bools(&bits)
        })
        .collect();
    let relations = Gf2Matrix::new(restricted_rows, d)
        .expect("uniform rows")
        .nullspace_basis();
    let words = relations
        .rows()
        .iter()
        .map(|x| {
            let mut v = Gf2Vector::zeros(code.ambient_length());
            for i in x.support() {
                v.add_assign_unchecked(&rows[i]);
            }
            v
        })
        .collect();
    LinearCode::from_vectors(code.ambient_length(), words).expect("uniform rows")
}

/// A hyperplane subcode of dimension `d − 1` that does not contain `v`.
///
/// The hyperplane is the kernel of the coordinate functional at the pivot
/// of the first canonical generator row that occurs in the expansion of `v`.
pub fn subcode_avoiding(code: &LinearCode, v: &Gf2Vector) -> Result<LinearCode> {
    Ok(subcode_avoiding_with_functional(code, v)?.0)
}

/// As [`subcode_avoiding`], also returning the coordinate `p` of the
/// functional `x ↦ x_p`.
pub fn subcode_avoiding_with_functional(
    code: &LinearCode,
    v: &Gf2Vector,
) -> Result<(LinearCode, usize)> {
    check_nonzero_member(code, v)?;
    let coeffs = code.coordinates(v)?.expect("membership checked");
    let chosen = coeffs
        .iter()
        .position(|&c| c)
        .expect("nonzero word has a nonzero coefficient");
    let rows = code
        .generator()
        .rows()
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != chosen)
        .map(|(_, r)| r.clone())
        .collect();
    let sub = LinearCode::from_vectors(code.ambient_length(), rows)?;
    Ok((sub, code.pivots()[chosen]))
}

/// Smallest code containing `code` and `v`.
pub fn extend_span(code: &LinearCode, v: &Gf2Vector) -> Result<LinearCode> {
    if v.len() != code.ambient_length() {
        return Err(Error::LengthMismatch {
            expected: code.ambient_length(),
            found: v.len(),
        });
    }
    let mut rows = code.generator().rows().to_vec();
    rows.push(v.clone());
    LinearCode::from_vectors(code.ambient_length(), rows)
}

fn check_nonzero_member(code: &LinearCode, w: &Gf2Vector) -> Result<()> {
    if !code.contains(w)? {
        return Err(Error::NotInCode);
    }
    if w.is_zero() {
        return Err(Error::ZeroWord);
    }
    Ok(())
}
