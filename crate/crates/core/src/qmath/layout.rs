//! Tensor-factor bookkeeping: partial trace, partial transpose and factor reordering.

use num_complex::Complex64;

use super::ComplexMatrix;
use crate::error::{Error, Result};

/// Dimensions of the tensor factors of a composite space, outermost first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsystemLayout {
    dims: Vec<usize>,
}

impl SubsystemLayout {
    pub fn new(dims: impl Into<Vec<usize>>) -> Result<Self> {
        let dims = dims.into();
        if dims.is_empty() || dims.contains(&0) {
            return Err(Error::InvalidParameter {
                name: "layout",
                value: f64::NAN,
                reason: "subsystem dimensions must be non-empty and positive".into(),
            });
        }
        Ok(Self { dims })
    }

    /// `n` qubits.
    pub fn qubits(n: usize) -> Self {
        Self { dims: vec![2; n] }
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn len(&self) -> usize {
        self.dims.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().product()
    }

    /// Row-major strides: index = Σ digitₛ·strideₛ.
    fn strides(&self) -> Vec<usize> {
        let mut strides = vec![1; self.dims.len()];
        for s in (0..self.dims.len().saturating_sub(1)).rev() {
            strides[s] = strides[s + 1] * self.dims[s + 1];
        }
        strides
    }

    /// For each linear index over the listed subsystems (in the listed order),
    /// the offset it contributes to the full linear index.
    fn offsets(&self, subsystems: &[usize]) -> Vec<usize> {
        let strides = self.strides();
        let mut offsets = vec![0usize];
        for &s in subsystems {
            let mut next = Vec::with_capacity(offsets.len() * self.dims[s]);
            for &base in &offsets {
                for digit in 0..self.dims[s] {
                    next.push(base + digit * strides[s]);
                }
            }
            offsets = next;
        }
        offsets
    }

    fn check_matrix(&self, m: &ComplexMatrix) -> Result<()> {
        let n = m.ensure_square()?;
        if n != self.total_dim() {
            return Err(Error::DimensionMismatch {
                expected: self.total_dim(),
                found: n,
            });
        }
        Ok(())
    }

    fn check_index(&self, index: usize) -> Result<()> {
        if index >= self.dims.len() {
            return Err(Error::IndexOutOfRange {
                index,
                len: self.dims.len(),
            });
        }
        Ok(())
    }
}

/// Reduces `m` onto the `keep` subsystems, tracing out the rest.
///
/// The result is ordered by ascending subsystem index regardless of the order of
/// `keep`. Duplicates are ignored. An empty `keep` yields the 1×1 matrix `[Tr m]`.
pub fn partial_trace(m: &ComplexMatrix, layout: &SubsystemLayout, keep: &[usize]) -> Result<ComplexMatrix> {
    layout.check_matrix(m)?;
    let mut kept: Vec<usize> = keep.to_vec();
    for &k in &kept {
        layout.check_index(k)?;
    }
    kept.sort_unstable();
    kept.dedup();
    let traced: Vec<usize> = (0..layout.len()).filter(|s| !kept.contains(s)).collect();

    let kept_off = layout.offsets(&kept);
    let traced_off = layout.offsets(&traced);
    let n = kept_off.len();
    let mut out = ComplexMatrix::zeros(n, n);
    for (a, &ra) in kept_off.iter().enumerate() {
        for (b, &rb) in kept_off.iter().enumerate() {
            let mut acc = Complex64::new(0.0, 0.0);
            for &t in &traced_off {
                acc += m[(ra + t, rb + t)];
            }
            out[(a, b)] = acc;
        }
    }
    Ok(out)
}

/// Transposes the indices of one subsystem.
pub fn partial_transpose(m: &ComplexMatrix, layout: &SubsystemLayout, subsystem: usize) -> Result<ComplexMatrix> {
    layout.check_matrix(m)?;
    layout.check_index(subsystem)?;
    let others: Vec<usize> = (0..layout.len()).filter(|&s| s != subsystem).collect();
    let inner = layout.offsets(&[subsystem]);
    let outer = layout.offsets(&others);

    let mut out = m.clone();
    for &ra in &outer {
        for &rb in &outer {
            for &i in &inner {
                for &j in &inner {
                    out[(ra + i, rb + j)] = m[(ra + j, rb + i)];
                }
            }
        }
    }
    Ok(out)
}

/// Reorders tensor factors: factor `order[p]` of the input becomes factor `p` of the output.
///
/// `order` must be a permutation of `0..layout.len()`.
pub fn permute_subsystems(m: &ComplexMatrix, layout: &SubsystemLayout, order: &[usize]) -> Result<ComplexMatrix> {
    layout.check_matrix(m)?;
    if order.len() != layout.len() {
        return Err(Error::DimensionMismatch {
            expected: layout.len(),
            found: order.len(),
        });
    }
    let mut seen = vec![false; layout.len()];
    for &s in order {
        layout.check_index(s)?;
        if std::mem::replace(&mut seen[s], true) {
            return Err(Error::InvalidParameter {
                name: "order",
                value: s as f64,
                reason: "subsystem listed twice".into(),
            });
        }
    }
    // Enumerating offsets in `order` walks the output basis in row-major order.
    let map = layout.offsets(order);
    Ok(ComplexMatrix::from_fn(map.len(), map.len(), |i, j| m[(map[i], map[j])]))
}
