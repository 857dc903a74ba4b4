use num_integer::Integer;

use super::{HeegaardDiagram, HeegaardError, Side};

/// Genus-1 diagram of `L(p, q)`: the alpha curve meets `c_0, ..., c_{p-1}`, the
/// beta curve meets `c_0, c_q, c_{2q}, ...` (indices mod `p`), all signs `+1`.
pub fn lens(p: u64, q: i64) -> Result<HeegaardDiagram, HeegaardError> {
    if p == 0 || (p as i64).gcd(&q) != 1 {
        return Err(HeegaardError::BadLensParameters { p, q });
    }
    let pu = p as usize;
    let step = q.rem_euclid(p as i64) as usize;
    let alpha = vec![(0..pu).collect()];
    let beta = vec![(0..pu).map(|k| (k * step) % pu).collect()];
    HeegaardDiagram::new(format!("lens{p}_{q}"), 1, vec![1; pu], alpha, beta)
}

/// The one-crossing genus-1 diagram of the 3-sphere.
pub fn s3() -> HeegaardDiagram {
    lens(1, 1).unwrap().with_name("s3")
}

/// Genus 1 with disjoint curves.
pub fn s2xs1() -> HeegaardDiagram {
    HeegaardDiagram::new("s2xs1", 1, vec![], vec![vec![]], vec![vec![]]).unwrap()
}

/// Adds an alpha/beta pair meeting once positively.
pub fn stabilize(d: &HeegaardDiagram) -> HeegaardDiagram {
    let c = d.crossing_count();
    let mut signs = d.signs.clone();
    signs.push(1);
    let mut alpha = d.alpha.clone();
    alpha.push(vec![c]);
    let mut beta = d.beta.clone();
    beta.push(vec![c]);
    HeegaardDiagram::new_unchecked(format!("{}+", d.name), d.genus + 1, signs, alpha, beta)
}

/// Disjoint union of the curve systems, with the crossings of `b` shifted past
/// those of `a`.
pub fn connected_sum(a: &HeegaardDiagram, b: &HeegaardDiagram) -> HeegaardDiagram {
    let shift = a.crossing_count();
    let moved = |curves: &[Vec<usize>]| -> Vec<Vec<usize>> {
        curves
            .iter()
            .map(|c| c.iter().map(|x| x + shift).collect())
            .collect()
    };
    let mut signs = a.signs.clone();
    signs.extend_from_slice(&b.signs);
    let mut alpha = a.alpha.clone();
    alpha.extend(moved(&b.alpha));
    let mut beta = a.beta.clone();
    beta.extend(moved(&b.beta));
    HeegaardDiagram::new_unchecked(
        format!("{}#{}", a.name, b.name),
        a.genus + b.genus,
        signs,
        alpha,
        beta,
    )
}

fn curve_mut(
    d: &mut HeegaardDiagram,
    side: Side,
    index: usize,
) -> Result<&mut Vec<usize>, HeegaardError> {
    let genus = d.genus;
    let curves = match side {
        Side::Alpha => &mut d.alpha,
        Side::Beta => &mut d.beta,
    };
    curves
        .get_mut(index)
        .ok_or(HeegaardError::CurveIndex { side, index, genus })
}

/// Reverses the orientation of one curve: its crossing order is reversed and
/// every crossing on it changes sign.
pub fn reverse_curve(
    d: &HeegaardDiagram,
    side: Side,
    index: usize,
) -> Result<HeegaardDiagram, HeegaardError> {
    let mut out = d.clone();
    let curve = curve_mut(&mut out, side, index)?;
    curve.reverse();
    let flipped = curve.clone();
    for c in flipped {
        out.signs[c] = -out.signs[c];
    }
    Ok(out)
}

/// Moves the basepoint of one curve forward past `k` crossings.
pub fn move_basepoint(
    d: &HeegaardDiagram,
    side: Side,
    index: usize,
    k: usize,
) -> Result<HeegaardDiagram, HeegaardError> {
    let mut out = d.clone();
    let curve = curve_mut(&mut out, side, index)?;
    let len = curve.len();
    if k > len || (len == 0 && k > 0) {
        return Err(HeegaardError::Offset { k, len });
    }
    if len > 0 {
        curve.rotate_left(k % len);
    }
    Ok(out)
}
