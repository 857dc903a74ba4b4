//! Hopf algebras attached to a finite group.

use super::{HopfBuilder, HopfData, HopfError};
use crate::group::FiniteGroup;
use crate::scalars::Scalar;

/// Largest group order accepted by [`drinfeld_double`] unless overridden.
pub const DEFAULT_DOUBLE_CAP: usize = 8;

/// The group algebra `k[G]`: `Delta(g) = g (x) g`, `eps(g) = 1`, `S(g) = g^-1`.
pub fn group_algebra<S: Scalar>(g: &FiniteGroup, field: &S::Field) -> HopfData<S> {
    let one = S::one(field);
    let n = g.order();
    let mut b = HopfBuilder::new(format!("k[{}]", g.name()), field, n);
    b.labels((0..n).map(|x| format!("g{x}")).collect()).unwrap();
    for x in 0..n {
        for y in 0..n {
            b.mult(x, y, g.mul(x, y), one.clone()).unwrap();
        }
        b.comult(x, x, x, one.clone()).unwrap();
        b.counit(x, one.clone()).unwrap();
        b.antipode(x, g.inv(x), one.clone()).unwrap();
    }
    b.unit(g.identity(), one).unwrap();
    b.build()
}

/// The function algebra `k^G` on the basis of point masses `delta_g`.
pub fn function_algebra<S: Scalar>(g: &FiniteGroup, field: &S::Field) -> HopfData<S> {
    let one = S::one(field);
    let n = g.order();
    let mut b = HopfBuilder::new(format!("k^{}", g.name()), field, n);
    b.labels((0..n).map(|x| format!("d{x}")).collect()).unwrap();
    for x in 0..n {
        b.mult(x, x, x, one.clone()).unwrap();
        b.unit(x, one.clone()).unwrap();
        for y in 0..n {
            b.comult(g.mul(x, y), x, y, one.clone()).unwrap();
        }
        b.antipode(x, g.inv(x), one.clone()).unwrap();
    }
    b.counit(g.identity(), one).unwrap();
    b.build()
}

/// The Drinfeld double `D(G) = k^G (x) k[G]` with basis `delta_x g` stored at
/// index `x * |G| + g`.
///
/// `(delta_x g)(delta_y h) = [x = g y g^-1] delta_x gh`,
/// `Delta(delta_x g) = sum_{yz = x} delta_y g (x) delta_z g`,
/// `S(delta_x g) = delta_{g^-1 x^-1 g} g^-1`.
pub fn drinfeld_double<S: Scalar>(
    g: &FiniteGroup,
    field: &S::Field,
    cap: usize,
) -> Result<HopfData<S>, HopfError> {
    let n = g.order();
    if n > cap {
        return Err(HopfError::CapExceeded { order: n, cap });
    }
    let one = S::one(field);
    let idx = |x: usize, h: usize| x * n + h;
    let conj = |h: usize, y: usize| g.mul(g.mul(h, y), g.inv(h));
    let mut b = HopfBuilder::new(format!("D({})", g.name()), field, n * n);
    b.labels(
        (0..n)
            .flat_map(|x| (0..n).map(move |h| format!("d{x}g{h}")))
            .collect(),
    )?;
    for x in 0..n {
        for h in 0..n {
            let i = idx(x, h);
            for y in 0..n {
                for k in 0..n {
                    if x == conj(h, y) {
                        b.mult(i, idx(y, k), idx(x, g.mul(h, k)), one.clone())?;
                    }
                }
                // y z = x  =>  z = y^-1 x
                let z = g.mul(g.inv(y), x);
                b.comult(i, idx(y, h), idx(z, h), one.clone())?;
            }
            let hi = g.inv(h);
            b.antipode(i, idx(g.mul(g.mul(hi, g.inv(x)), h), hi), one.clone())?;
        }
        b.unit(idx(x, g.identity()), one.clone())?;
    }
    for h in 0..n {
        b.counit(idx(g.identity(), h), one.clone())?;
    }
    Ok(b.build())
}
