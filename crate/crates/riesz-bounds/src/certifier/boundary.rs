//! Boundary rules: regions where the lowered function has an exact zero and
//! box enclosures alone can never show the sign.

use super::search::{search, Lowered};
use super::CertifierConfig;
use crate::functions::{hessian, ScalarFn, Side, MAX_DERIVATIVE_ORDER};
use crate::interval::{IBox, Interval};

/// A region removed from the main search, with the justification.
pub(crate) struct Exclusion {
    pub region: IBox,
    pub note: String,
    /// Boxes spent proving the rule.
    pub boxes: u64,
}

const SLAB_BUDGET: u64 = 200_000;
const HALVINGS: u32 = 12;

/// Shrinks the ends of a one-variable box where the lowered derivative has no
/// finite enclosure.
pub(crate) fn shrink_singular_ends<F: ScalarFn>(
    h: &Lowered<F>,
    domain: &IBox,
    delta: f64,
    notes: &mut Vec<String>,
) -> IBox {
    let side = domain.0[0];
    let bad = |x: f64| {
        let v = h.value_iv(&[Interval::point(x)]);
        !v.is_valid() || v.is_unbounded()
    };
    let (mut lo, mut hi) = (side.lo(), side.hi());
    if bad(lo) && hi - lo > 2.0 * delta {
        lo += delta;
        notes.push(format!("derivative singular at {}; domain starts at {lo}", side.lo()));
    }
    if bad(hi) && hi - lo > 2.0 * delta {
        hi -= delta;
        notes.push(format!("derivative singular at {}; domain ends at {hi}", side.hi()));
    }
    IBox(vec![Interval::new(lo, hi).unwrap_or(side)])
}

/// Replaces side `var` of `b`.
fn with_side(b: &IBox, var: usize, side: Interval) -> IBox {
    let mut out = b.clone();
    out.0[var] = side;
    out
}

/// Proves `h >= 0` on a slab next to the face `x_var = at` from the exact
/// vanishing of `h, ..., h^(k-1)` there and the sign of `h^(k)` on the slab.
///
/// On the low side `h(x) = h^(k)(xi) (x - at)^k / k!` with `x >= at`; on the
/// high side `x <= at` and the factor `(x - at)^k` carries `(-1)^k`.
#[allow(clippy::too_many_arguments)]
pub(crate) fn face_zero<F: ScalarFn>(
    h: &Lowered<F>,
    domain: &IBox,
    var: usize,
    side: Side,
    at: (i64, i64),
    k: u32,
    fact: &str,
    cfg: &CertifierConfig,
) -> Result<Exclusion, String> {
    if var >= domain.dim() || k == 0 {
        return Err(format!("face rule on variable {var} with order {k} is malformed"));
    }
    if h.order + k > MAX_DERIVATIVE_ORDER {
        return Err(format!("face rule needs derivative order {}", h.order + k));
    }
    if domain.dim() > 1 && h.order > 0 {
        return Err("face rule on a derived multi-variable claim".into());
    }
    let at_iv = Interval::ratio(at.0, at.1);
    let face = with_side(domain, var, at_iv);
    for j in 0..k {
        let dj = Lowered { f: h.f, order: h.order + j, var, sign: h.sign };
        let v = dj.value_iv(&face.0);
        if !v.is_valid() || !v.contains_zero() {
            return Err(format!("derivative {j} on the face x{var} = {}/{} encloses {v}, not 0", at.0, at.1));
        }
    }
    let flip = if side == Side::Hi && k % 2 == 1 { -1.0 } else { 1.0 };
    let dk = Lowered { f: h.f, order: h.order + k, var, sign: h.sign * flip };
    let full = domain.0[var];
    let slab_cfg = CertifierConfig { record_leaves: false, ..cfg.clone() };
    let mut w = full.width() / 8.0;
    let mut spent = 0u64;
    for _ in 0..=HALVINGS {
        let slab_side = match side {
            Side::Lo => Interval::new(full.lo(), (at_iv.hi() + w).min(full.hi())),
            Side::Hi => Interval::new((at_iv.lo() - w).max(full.lo()), full.hi()),
        };
        let Ok(slab_side) = slab_side else { break };
        let slab = with_side(domain, var, slab_side);
        let out = search(&dk, &slab, &[], &slab_cfg, SLAB_BUDGET);
        spent += out.boxes;
        if out.proved() {
            let sym = if flip < 0.0 { "-" } else { "" };
            let note = format!(
                "face x{var} = {}/{}: {fact}; {sym}d^{k} >= 0 certified on {slab_side}",
                at.0, at.1
            );
            return Ok(Exclusion { region: slab, note, boxes: spent });
        }
        w /= 2.0;
    }
    Err(format!("derivative {k} has no certified sign next to x{var} = {}/{}", at.0, at.1))
}

/// Positive definiteness of a symmetric interval matrix: Sylvester for
/// sizes 1 and 2, strict diagonal dominance beyond.
fn positive_definite(m: &[Vec<Interval>]) -> bool {
    let n = m.len();
    if m.iter().flatten().any(|v| !v.is_valid() || v.is_unbounded()) {
        return false;
    }
    match n {
        1 => m[0][0].lo() > 0.0,
        2 => {
            let det = m[0][0] * m[1][1] - m[0][1].sqr();
            m[0][0].lo() > 0.0 && det.lo() > 0.0
        }
        _ => (0..n).all(|i| {
            let off: f64 = (0..n).filter(|&j| j != i).map(|j| m[i][j].mag()).sum();
            m[i][i].lo() > off * (1.0 + 1e-12)
        }),
    }
}

/// Excludes a box around an isolated zero `p` of `h` with vanishing gradient
/// by proving the Hessian of `h` positive definite on the box, which makes `p`
/// the minimum there.
pub(crate) fn touch<F: ScalarFn>(h: &Lowered<F>, domain: &IBox, p: Vec<Interval>, fact: &str) -> Result<Exclusion, String> {
    if h.order != 0 {
        return Err("touch rule on a derived claim".into());
    }
    if p.len() != domain.dim() {
        return Err("touch point has the wrong dimension".into());
    }
    let v = h.value_iv(&p);
    if !v.is_valid() || !v.contains_zero() {
        return Err(format!("value at the touch point encloses {v}, not 0"));
    }
    let grad = crate::functions::gradient(h.f, &p);
    if grad.iter().any(|g| !g.is_valid() || !g.contains_zero()) {
        return Err("gradient at the touch point does not enclose 0".into());
    }
    let mut rho = 0.1;
    let mut tried = 0u64;
    for _ in 0..=HALVINGS {
        let sides: Option<Vec<Interval>> = p
            .iter()
            .zip(&domain.0)
            .map(|(c, d)| {
                let r = rho * d.width();
                Interval::new(c.lo() - r, c.hi() + r).ok().and_then(|b| b.intersect(d))
            })
            .collect();
        let Some(sides) = sides else { break };
        let b = IBox(sides);
        tried += 1;
        let mut hs = hessian(h.f, &b.0);
        if h.sign < 0.0 {
            hs.iter_mut().flatten().for_each(|x| *x = -*x);
        }
        if positive_definite(&hs) {
            let point: Vec<String> = p.iter().map(|c| format!("{:.6}", c.mid())).collect();
            let note = format!(
                "touch point ({}): {fact}; Hessian positive definite on a box of relative radius {rho}",
                point.join(", ")
            );
            return Ok(Exclusion { region: b, note, boxes: tried });
        }
        rho /= 2.0;
    }
    Err("Hessian not certified positive definite near the touch point".into())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(lo: f64, hi: f64) -> Interval {
        Interval::new(lo, hi).unwrap()
    }

    #[test]
    fn definiteness_tests() {
        assert!(positive_definite(&[vec![iv(1.0, 2.0)]]));
        assert!(!positive_definite(&[vec![iv(-0.1, 2.0)]]));
        let m = vec![vec![iv(2.0, 2.0), iv(-1.0, 1.0)], vec![iv(-1.0, 1.0), iv(2.0, 2.0)]];
        assert!(positive_definite(&m));
        let m = vec![vec![iv(1.0, 1.0), iv(1.0, 1.0)], vec![iv(1.0, 1.0), iv(1.0, 1.0)]];
        assert!(!positive_definite(&m));
    }
}
