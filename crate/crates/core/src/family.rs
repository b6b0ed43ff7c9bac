//! The two symmetric tensor families placed at vertices, and the bilinear
//! form used to contract them along edges.
//!
//! Tensors are never stored densely. An entry is computed from the sorted
//! index multiset, so every family is symmetric by construction, and the
//! contraction engine asks only for the nonzero completions of a partially
//! fixed index tuple.
//!
//! Colors are `1..=r`. In the cycle family color `r` is the "off-cycle"
//! color and `1..r` label cycle components.

use crate::error::{Error, Result};
use crate::rings::Ring;

pub type Color = u16;

#[derive(Debug, Clone, PartialEq)]
pub enum FamilyKind<E> {
    /// Entry 1 when all indices are pairwise distinct, else 0.
    Coloring,
    /// Entry `x_i` on permutations of `(i, i, r, ..., r)` with `i < r`,
    /// `t` on `(r, ..., r)`, 0 otherwise.
    Cycle { x: Vec<E>, t: E },
}

#[derive(Debug, Clone)]
pub struct TensorFamily<R: Ring> {
    ring: R,
    r: usize,
    kind: FamilyKind<R::Elem>,
}

impl<R: Ring> TensorFamily<R> {
    pub fn coloring(ring: R, r: usize) -> Self {
        assert!(r <= Color::MAX as usize, "too many colors");
        TensorFamily {
            ring,
            r,
            kind: FamilyKind::Coloring,
        }
    }

    /// Cycle family with `r = x.len() + 1` colors.
    pub fn cycle(ring: R, x: Vec<R::Elem>, t: R::Elem) -> Self {
        let r = x.len() + 1;
        assert!(r <= Color::MAX as usize, "too many colors");
        TensorFamily {
            ring,
            r,
            kind: FamilyKind::Cycle { x, t },
        }
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    /// Number of colors, i.e. the dimension `r` of the underlying space.
    pub fn colors(&self) -> usize {
        self.r
    }

    pub fn kind(&self) -> &FamilyKind<R::Elem> {
        &self.kind
    }

    /// Value assigned to a vertex of degree zero.
    pub fn scalar(&self) -> R::Elem {
        match &self.kind {
            FamilyKind::Coloring => self.ring.one(),
            FamilyKind::Cycle { t, .. } => t.clone(),
        }
    }

    fn validate(&self, idx: &[Color]) -> Result<()> {
        match idx.iter().find(|&&c| c == 0 || c as usize > self.r) {
            Some(c) => Err(Error::arg(format!("color {c} outside 1..={}", self.r))),
            None => Ok(()),
        }
    }

    /// Tensor entry for the index tuple `idx`; its length is the degree.
    pub fn entry(&self, idx: &[Color]) -> Result<R::Elem> {
        self.validate(idx)?;
        let mut key = idx.to_vec();
        key.sort_unstable();
        Ok(self.entry_sorted(&key))
    }

    fn entry_sorted(&self, key: &[Color]) -> R::Elem {
        match &self.kind {
            FamilyKind::Coloring => {
                if key.windows(2).all(|w| w[0] < w[1]) {
                    self.ring.one()
                } else {
                    self.ring.zero()
                }
            }
            FamilyKind::Cycle { x, t } => {
                let off = self.r as Color;
                let on: Vec<Color> = key.iter().copied().filter(|&c| c != off).collect();
                match on.as_slice() {
                    [] => t.clone(),
                    [a, b] if a == b => x[*a as usize - 1].clone(),
                    _ => self.ring.zero(),
                }
            }
        }
    }

    /// All full index tuples extending `partial` (one slot per tensor leg,
    /// `None` for a free slot) with a nonzero entry, paired with that entry.
    pub fn enumerate_completions(&self, partial: &[Option<Color>]) -> Result<Vec<(Vec<Color>, R::Elem)>> {
        let fixed: Vec<Color> = partial.iter().flatten().copied().collect();
        self.validate(&fixed)?;
        let mut out = Vec::new();
        self.for_each_completion(partial, |idx, v| out.push((idx.to_vec(), v.clone())));
        Ok(out)
    }

    /// Visits every nonzero completion of `partial`. Colors in `partial`
    /// must already be valid.
    pub(crate) fn for_each_completion<F>(&self, partial: &[Option<Color>], mut visit: F)
    where
        F: FnMut(&[Color], &R::Elem),
    {
        let mut buf: Vec<Color> = partial.iter().map(|c| c.unwrap_or(0)).collect();
        let free: Vec<usize> = (0..partial.len()).filter(|&s| partial[s].is_none()).collect();
        match &self.kind {
            FamilyKind::Coloring => {
                let mut used = vec![false; self.r + 1];
                for &c in partial.iter().flatten() {
                    if std::mem::replace(&mut used[c as usize], true) {
                        return;
                    }
                }
                let one = self.ring.one();
                distinct_fill(&mut buf, &free, 0, &mut used, &mut |idx| visit(idx, &one));
            }
            FamilyKind::Cycle { x, t } => {
                let off = self.r as Color;
                let on: Vec<(usize, Color)> = partial
                    .iter()
                    .enumerate()
                    .filter_map(|(s, c)| c.filter(|&c| c != off).map(|c| (s, c)))
                    .collect();
                let nonzero = |v: &R::Elem| !self.ring.is_zero(v);
                for &s in &free {
                    buf[s] = off;
                }
                match on.as_slice() {
                    [] => {
                        if nonzero(t) {
                            visit(&buf, t);
                        }
                        for (a_pos, &a) in free.iter().enumerate() {
                            for &b in &free[a_pos + 1..] {
                                for (i, xi) in x.iter().enumerate() {
                                    if nonzero(xi) {
                                        buf[a] = i as Color + 1;
                                        buf[b] = i as Color + 1;
                                        visit(&buf, xi);
                                    }
                                }
                                buf[a] = off;
                                buf[b] = off;
                            }
                        }
                    }
                    [(_, c)] => {
                        let xi = &x[*c as usize - 1];
                        if nonzero(xi) {
                            for &s in &free {
                                buf[s] = *c;
                                visit(&buf, xi);
                                buf[s] = off;
                            }
                        }
                    }
                    [(_, a), (_, b)] if a == b => {
                        let xi = &x[*a as usize - 1];
                        if nonzero(xi) {
                            visit(&buf, xi);
                        }
                    }
                    _ => {}
                }
            }
        }
    }
}

fn distinct_fill<F: FnMut(&[Color])>(
    buf: &mut [Color],
    free: &[usize],
    pos: usize,
    used: &mut [bool],
    visit: &mut F,
) {
    if pos == free.len() {
        visit(buf);
        return;
    }
    for c in 1..used.len() {
        if !used[c] {
            used[c] = true;
            buf[free[pos]] = c as Color;
            distinct_fill(buf, free, pos + 1, used, visit);
            used[c] = false;
        }
    }
}

/// Coloring-family entry: 1 iff the `d` indices are pairwise distinct.
pub fn coloring_entry(d: usize, idx: &[Color], r: usize) -> Result<u8> {
    if idx.len() != d {
        return Err(Error::arg(format!("expected {d} indices, got {}", idx.len())));
    }
    let fam = TensorFamily::coloring(crate::rings::Integers, r);
    let v = fam.entry(idx)?;
    Ok(if v == num_bigint::BigInt::from(1) { 1 } else { 0 })
}

/// Cycle-family entry for the `d` indices in `idx`.
pub fn cycle_entry<R: Ring>(d: usize, idx: &[Color], family: &TensorFamily<R>) -> Result<R::Elem> {
    if idx.len() != d {
        return Err(Error::arg(format!("expected {d} indices, got {}", idx.len())));
    }
    if d == 0 {
        return Ok(family.scalar());
    }
    family.entry(idx)
}

/// A symmetric bilinear form on the `r`-dimensional color space.
#[derive(Debug, Clone, PartialEq)]
pub struct BilinearForm<E> {
    matrix: Vec<Vec<E>>,
    identity: bool,
}

impl<E: Clone + PartialEq> BilinearForm<E> {
    pub fn identity<R: Ring<Elem = E>>(ring: &R, r: usize) -> Self {
        let matrix = (0..r)
            .map(|i| (0..r).map(|j| if i == j { ring.one() } else { ring.zero() }).collect())
            .collect();
        BilinearForm { matrix, identity: true }
    }

    /// A general symmetric form. The identity flag is set when the matrix is `I_r`.
    pub fn from_matrix<R: Ring<Elem = E>>(ring: &R, matrix: Vec<Vec<E>>) -> Result<Self> {
        let r = matrix.len();
        if matrix.iter().any(|row| row.len() != r) {
            return Err(Error::arg("bilinear form matrix is not square"));
        }
        let symmetric = matrix
            .iter()
            .enumerate()
            .all(|(i, row)| row.iter().enumerate().all(|(j, v)| *v == matrix[j][i]));
        if !symmetric {
            return Err(Error::arg("bilinear form matrix is not symmetric"));
        }
        let identity = BilinearForm::identity(ring, r).matrix == matrix;
        Ok(BilinearForm { matrix, identity })
    }

    pub fn dim(&self) -> usize {
        self.matrix.len()
    }

    pub fn is_identity(&self) -> bool {
        self.identity
    }

    pub fn weight(&self, a: Color, b: Color) -> &E {
        &self.matrix[a as usize - 1][b as usize - 1]
    }
}
