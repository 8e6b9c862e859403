//! Truncated bivariate generating functions with exact rational
//! coefficients, and the functional equations they satisfy.
//!
//! `G` counts ffrr-avoiding Dyck paths by semi-length and peaks, `F` the
//! Pop-up images in J(Phi+ of A), `I` the symmetric ffrr-avoiding paths and
//! `J` the Pop-up images in J(Phi+ of B). `M` counts Pop images in Tam(A) by
//! length and descents; `N`, `P`, `Q` and `K` are built from it for Tam(B).

mod bi;
pub mod lab;

pub use bi::BiSeries;
pub use lab::{SeriesCheck, SeriesName, SeriesReport};

use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};

pub const DEFAULT_ORDER: usize = 12;
pub const MAX_ORDER: usize = 16;

fn check_order(order: usize) -> Result<()> {
    if order > MAX_ORDER {
        return Err(Error::Guard { what: "series order", value: order, limit: MAX_ORDER });
    }
    Ok(())
}

fn rat(v: i64) -> BigRational {
    BigRational::from_integer(v.into())
}

/// `c x^i y^j` at the given order.
fn mono(order: usize, i: usize, j: usize, c: i64) -> BiSeries {
    BiSeries::monomial(order, i, j, rat(c))
}

/// Solves `S = step(S)` by iteration from zero. `step` must raise the
/// x-adic precision by one each round; iterate `t + 1` is required to agree
/// with iterate `t` through `x^t`.
pub fn fixed_point(order: usize, what: &'static str, step: impl Fn(&BiSeries) -> BiSeries) -> Result<BiSeries> {
    let mut current = step(&BiSeries::zero(order));
    for t in 0..=order {
        let next = step(&current);
        if !next.agrees_through(&current, t) {
            return Err(Error::NonConvergence(what));
        }
        current = next;
    }
    if step(&current) != current {
        return Err(Error::NonConvergence(what));
    }
    Ok(current)
}

/// `G = 1 + xyG + x(G - 1) + x^2 y G (G - 1)`.
pub fn solve_g(order: usize) -> Result<BiSeries> {
    check_order(order)?;
    g_series(order)
}

fn g_series(order: usize) -> Result<BiSeries> {
    let one = BiSeries::one(order);
    let xy = mono(order, 1, 1, 1);
    let x = BiSeries::x(order);
    let x2y = mono(order, 2, 1, 1);
    fixed_point(order, "G", |g| {
        let gm1 = g - &one;
        let mut s = &one + &(&xy * g);
        s = &s + &(&x * &gm1);
        &s + &(&(&x2y * g) * &gm1)
    })
}

/// `H = G - 1`.
pub fn solve_h(order: usize) -> Result<BiSeries> {
    Ok(&solve_g(order)? - &BiSeries::one(order))
}

/// `F = 1 + x(G - 1) + xy`.
pub fn solve_f(order: usize) -> Result<BiSeries> {
    let g = solve_g(order)?;
    let one = BiSeries::one(order);
    let s = &one + &(&BiSeries::x(order) * &(&g - &one));
    Ok(&s + &mono(order, 1, 1, 1))
}

/// `I = 1 + x^2 y I + x I + x^4 y I (G(x^2) - 1) + x^3 y (G(x^2) - 1) - x + xy`.
pub fn solve_i(order: usize) -> Result<BiSeries> {
    check_order(order)?;
    i_series(order)
}

fn i_series(order: usize) -> Result<BiSeries> {
    let one = BiSeries::one(order);
    let gx2 = &g_series(order / 2)?.substitute_x_squared(order)? - &one;
    let base = &(&(&one - &BiSeries::x(order)) + &mono(order, 1, 1, 1)) + &(&mono(order, 3, 1, 1) * &gx2);
    let x2y = mono(order, 2, 1, 1);
    let x = BiSeries::x(order);
    let x4y_g = &mono(order, 4, 1, 1) * &gx2;
    fixed_point(order, "I", |i| {
        let mut s = &base + &(&x2y * i);
        s = &s + &(&x * i);
        &s + &(&x4y_g * i)
    })
}

/// `J = 1 + x * odd(I)`, where `odd(I)` collects the odd powers of `x` in
/// `I` with `x^(2t+1)` sent to `x^t`. This is the average of `I(sqrt x)`
/// and `I(-sqrt x)` taken with the sign that keeps only odd powers.
pub fn solve_j(order: usize) -> Result<BiSeries> {
    check_order(order)?;
    let i = i_series(2 * order + 1)?;
    let odd = i.odd_part()?;
    Ok(&BiSeries::one(order) + &odd.truncate(order).shift(1, 0))
}

/// `J` from the radical form `(w^2 + 4z)^(-1/2)` with `w = xy + 1` and
/// `z = xy / (x - 1)`.
pub fn radical_j(order: usize) -> Result<BiSeries> {
    check_order(order)?;
    let w = &BiSeries::one(order) + &mono(order, 1, 1, 1);
    let z = &mono(order, 1, 1, -1) * &(&BiSeries::one(order) - &BiSeries::x(order)).inverse()?;
    (&(&w * &w) + &z.scale(&rat(4))).inv_sqrt()
}

pub fn radical_check_j(order: usize) -> Result<bool> {
    Ok(radical_j(order)? == solve_j(order)?)
}

/// `G` from its closed form
/// `-(x - 1 + xy - x^2 y + sqrt((x - 1)(4x^2 y + (x - 1)(xy - 1)^2))) / (2x^2 y)`.
pub fn radical_g(order: usize) -> Result<BiSeries> {
    check_order(order)?;
    let n = order + 2;
    let one = BiSeries::one(n);
    let x = BiSeries::x(n);
    let xm1 = &x - &one;
    let xym1 = &mono(n, 1, 1, 1) - &one;
    let d = &xm1 * &(&mono(n, 2, 1, 4) + &(&xm1 * &(&xym1 * &xym1)));
    let lin = &(&xm1 + &mono(n, 1, 1, 1)) - &mono(n, 2, 1, 1);
    let num = -&(&lin + &d.sqrt()?);
    Ok(num.div_monomial(2, 1)?.scale(&BigRational::new(1.into(), 2.into())))
}

/// `I` from its closed form `(1 + 2x - 3x^2 + x^2 y - x^4 y - sqrt R) /
/// (x (1 - 2x + x^2 - x^2 y + x^4 y + sqrt R))` with
/// `R = (x^2 - 1)(4x^4 y + (x^2 - 1)(x^2 y - 1)^2)`.
pub fn radical_i(order: usize) -> Result<BiSeries> {
    check_order(order)?;
    let n = order + 1;
    let one = BiSeries::one(n);
    let x2m1 = &mono(n, 2, 0, 1) - &one;
    let x2ym1 = &mono(n, 2, 1, 1) - &one;
    let r = &x2m1 * &(&mono(n, 4, 1, 4) + &(&x2m1 * &(&x2ym1 * &x2ym1)));
    let root = r.sqrt()?;
    let top = [(0, 0, 1), (1, 0, 2), (2, 0, -3), (2, 1, 1), (4, 1, -1)]
        .iter()
        .fold(BiSeries::zero(n), |acc, &(i, j, c)| &acc + &mono(n, i, j, c));
    let bottom = [(0, 0, 1), (1, 0, -2), (2, 0, 1), (2, 1, -1), (4, 1, 1)]
        .iter()
        .fold(BiSeries::zero(n), |acc, &(i, j, c)| &acc + &mono(n, i, j, c));
    let num = (&top - &root).div_monomial(1, 0)?;
    Ok(&num * &(&bottom + &root).inverse()?.truncate(order))
}

/// `J = 1 - A / B` with `D = (x - 1)(4x^2 y + (x - 1)(xy - 1)^2)`,
/// `A = x (-2 + 2x - y - 2xy + 3x^2 y + xy^2 - 2x^2 y^2 + x^3 y^2 + (2 - y + xy) sqrt D)`,
/// `B = 1 - 2x + x^2 - 2xy + 2x^3 y + x^2 y^2 - 2x^3 y^2 + x^4 y^2 + (1 + x - xy + x^2 y) sqrt D`.
pub fn radical_j_rational(order: usize) -> Result<BiSeries> {
    check_order(order)?;
    let n = order;
    let poly = |terms: &[(usize, usize, i64)]| {
        terms.iter().fold(BiSeries::zero(n), |acc, &(i, j, c)| &acc + &mono(n, i, j, c))
    };
    let xm1 = poly(&[(1, 0, 1), (0, 0, -1)]);
    let xym1 = poly(&[(1, 1, 1), (0, 0, -1)]);
    let d = &xm1 * &(&mono(n, 2, 1, 4) + &(&xm1 * &(&xym1 * &xym1)));
    let root = d.sqrt()?;
    let a_poly = poly(&[(0, 0, -2), (1, 0, 2), (0, 1, -1), (1, 1, -2), (2, 1, 3), (1, 2, 1), (2, 2, -2), (3, 2, 1)]);
    let a = &BiSeries::x(n) * &(&a_poly + &(&poly(&[(0, 0, 2), (0, 1, -1), (1, 1, 1)]) * &root));
    let b_poly = poly(&[(0, 0, 1), (1, 0, -2), (2, 0, 1), (1, 1, -2), (3, 1, 2), (2, 2, 1), (3, 2, -2), (4, 2, 1)]);
    let b = &b_poly + &(&poly(&[(0, 0, 1), (1, 0, 1), (1, 1, -1), (2, 1, 1)]) * &root);
    Ok(&BiSeries::one(n) - &(&a * &b.inverse()?))
}

/// The Tam(A) and Tam(B) generating functions, all in the descent variable.
#[derive(Clone, Debug)]
pub struct TamariSeries {
    /// `[x^m y^d]`: Pop images in Tam(A) of length `m` with `d` descents.
    pub m: BiSeries,
    /// `M(x, y^2)`.
    pub m2: BiSeries,
    pub p: BiSeries,
    pub q: BiSeries,
    /// `[x^n y^d]`: Pop images in Tam(B_n) with `d` descents.
    pub n: BiSeries,
    /// `[x^n y^u]`: Pop images in Tam(B_n) with `u` upper covers.
    pub k: BiSeries,
}

pub fn solve_tamari(order: usize) -> Result<TamariSeries> {
    check_order(order)?;
    let m = BiSeries::from_fn(
        order,
        |len| len / 2,
        |len, d| BigRational::from_integer(crate::formulas::m_coefficient(len, d)),
    );
    let m2 = m.substitute_y_squared();
    let y = BiSeries::y(order);
    let denom = (&BiSeries::one(order) - &(&y * &m2)).inverse()?;
    let q = &m2 * &denom;
    let p = &(&mono(order, 0, 2, 1) * &(&m2 * &m2)) * &denom;
    let n = &p + &q;
    // a Pop image with d descents has n - ceil(d/2) upper covers
    let mut k = BiSeries::zero(order);
    for len in 0..=order {
        for (d, c) in n.row(len).iter().enumerate() {
            if let Some(u) = len.checked_sub(d.div_ceil(2)) {
                k.add_to(len, u, c.clone());
            }
        }
    }
    Ok(TamariSeries { m, m2, p, q, n, k })
}

/// `M(x, y^2)` from the closed form
/// `(1 - x - sqrt(1 - 2x + x^2 - 4x^2 y^2)) / (2x y^2)`.
pub fn radical_m2(order: usize) -> Result<BiSeries> {
    check_order(order)?;
    let n = order + 1;
    let one = BiSeries::one(n);
    let inner = &(&(&one - &mono(n, 1, 0, 2)) + &mono(n, 2, 0, 1)) - &mono(n, 2, 2, 4);
    let num = &(&one - &BiSeries::x(n)) - &inner.sqrt()?;
    Ok(num.div_monomial(1, 2)?.scale(&BigRational::new(1.into(), 2.into())))
}

/// `N = x N0 + x y N1` with `L = sqrt(1 - (2xy / (1 - x))^2)`,
/// `N0 = 1/(1-x) + (1+x)/(2x(1-x)) (1/L - 1)` and
/// `N1 = (1-x)^(-2) ((x+1)/L - (1/2) ((1-x)/(xy))^2 (1 - L))`.
pub fn split_n(order: usize) -> Result<BiSeries> {
    check_order(order)?;
    let n = order + 2;
    let one = BiSeries::one(n);
    let half = BigRational::new(1.into(), 2.into());
    let one_minus_x = &one - &BiSeries::x(n);
    let inv_1mx = one_minus_x.inverse()?;
    let t = &mono(n, 1, 1, 2) * &inv_1mx;
    let l = (&one - &(&t * &t)).sqrt()?;
    let inv_l = l.inverse()?;
    let a = (&inv_l - &one).div_monomial(1, 0)?;
    let big = a.order();
    let n0 = &inv_1mx.truncate(big) + &(&(&(&one + &BiSeries::x(n)) * &inv_1mx).truncate(big) * &a).scale(&half);
    let c = (&one - &l).div_monomial(2, 2)?;
    let inner = &(&(&one + &BiSeries::x(n)) * &inv_l).truncate(c.order())
        - &(&(&one_minus_x * &one_minus_x).truncate(c.order()) * &c).scale(&half);
    let n1 = &(&inv_1mx * &inv_1mx).truncate(inner.order()) * &inner;
    let total = &n0.truncate(order).shift(1, 0) + &n1.truncate(order).shift(1, 1);
    Ok(total.truncate(order))
}

/// `1 / (1 - x)` as a convenience for the command line.
pub fn geometric(order: usize) -> BiSeries {
    BiSeries::from_fn(order, |_| 0, |_, _| BigRational::one())
}
