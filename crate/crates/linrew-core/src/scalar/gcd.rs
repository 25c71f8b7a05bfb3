//! Multivariate polynomial gcd over `Q` by content/primitive-part reduction
//! with a primitive pseudo-remainder sequence on the univariate spine.
//!
//! Rational inputs are cleared to primitive integer polynomials first; the
//! result is primitive over `Z` with a positive lex-leading coefficient, so it
//! is a canonical representative of the gcd up to units of `Q`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::{MultiPoly, XExponent};
use super::Rational;

/// Integer-coefficient working representation.
#[derive(Clone, PartialEq, Eq, Debug)]
struct ZPoly {
    nvars: usize,
    terms: BTreeMap<XExponent, BigInt>,
}

impl ZPoly {
    fn zero(nvars: usize) -> Self {
        ZPoly { nvars, terms: BTreeMap::new() }
    }

    fn constant(nvars: usize, value: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !value.is_zero() {
            terms.insert(XExponent::zero(nvars), value);
        }
        ZPoly { nvars, terms }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, exp: XExponent, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        use alloc::collections::btree_map::Entry;
        match self.terms.entry(exp) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get() + &coeff;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.nvars = self.nvars.max(other.nvars);
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.nvars = self.nvars.max(other.nvars);
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }

    /// Substitute an integer for one variable.
    fn eval_var(&self, var: usize, value: &BigInt) -> Self {
        let mut out = Self::zero(self.nvars);
        for (exp, c) in &self.terms {
            let mut coeff = c.clone();
            for _ in 0..exp.get(var) {
                coeff *= value;
            }
            out.add_term(exp.with_var(var, 0), coeff);
        }
        out
    }

    fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.add_term(ea.add(eb), ca * cb);
            }
        }
        out
    }

    fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|e| e.get(var)).max().unwrap_or(0)
    }

    /// The coefficient of `x_var^power`, a polynomial with `x_var` degree 0.
    fn coeff_of(&self, var: usize, power: u32) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            if e.get(var) == power {
                out.add_term(e.with_var(var, 0), c.clone());
            }
        }
        out
    }

    fn mul_var_pow(&self, var: usize, power: u32) -> Self {
        ZPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.with_var(var, e.get(var) + power), c.clone()))
                .collect(),
        }
    }

    /// Integer content: gcd of all coefficients, nonnegative.
    fn int_content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    fn div_int(&self, d: &BigInt) -> Self {
        ZPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let (q, r) = c.div_rem(d);
                    debug_assert!(r.is_zero());
                    (e.clone(), q)
                })
                .collect(),
        }
    }

    /// Exact multivariate division by lex leading-term elimination; `None`
    /// when the division is not exact.
    fn try_exact_div(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        let (dlead, dcoeff) = divisor.terms.iter().next_back().unwrap();
        let mut rem = self.clone();
        let mut quot = Self::zero(self.nvars.max(divisor.nvars));
        while let Some((rlead, rcoeff)) = rem.terms.iter().next_back() {
            let exp = rlead.checked_sub(dlead)?;
            let (q, r) = rcoeff.div_rem(dcoeff);
            if !r.is_zero() {
                return None;
            }
            let mono = ZPoly {
                nvars: quot.nvars,
                terms: BTreeMap::from([(exp, q)]),
            };
            rem = rem.sub(&divisor.mul(&mono));
            let (e, c) = mono.terms.into_iter().next().unwrap();
            quot.add_term(e, c);
        }
        Some(quot)
    }

    /// Exact division, panicking when not exact (internal invariant).
    fn exact_div(&self, divisor: &Self) -> Self {
        self.try_exact_div(divisor)
            .expect("exact_div: division is not exact")
    }

    /// Content with respect to one variable: the gcd of the `x_var`-power
    /// coefficients (each free of `x_var`).
    fn content_in(&self, var: usize) -> Self {
        let mut g = Self::zero(self.nvars);
        for power in 0..=self.degree_in(var) {
            let c = self.coeff_of(var, power);
            if !c.is_zero() {
                g = gcd_z(&g, &c);
            }
        }
        g
    }

    fn lex_leading_sign(&self) -> i8 {
        match self.terms.iter().next_back() {
            None => 0,
            Some((_, c)) => {
                if c.is_negative() {
                    -1
                } else {
                    1
                }
            }
        }
    }
}

/// Highest variable index that actually occurs in `f` or `g`.
fn main_variable(f: &ZPoly, g: &ZPoly) -> Option<usize> {
    (0..f.nvars.max(g.nvars))
        .rev()
        .find(|&v| f.degree_in(v) > 0 || g.degree_in(v) > 0)
}

/// One pseudo-remainder step family in `var`: returns a scalar multiple of
/// `lc(b)^s * a mod b`. Only used up to scalar factors, which the primitive
/// PRS strips afterwards; the integer content is shed every step to curb
/// coefficient growth.
fn pseudo_rem(a: &ZPoly, b: &ZPoly, var: usize) -> ZPoly {
    let db = b.degree_in(var);
    let lb = b.coeff_of(var, db);
    let mut r = a.clone();
    while !r.is_zero() {
        let dr = r.degree_in(var);
        if dr < db {
            break;
        }
        let lr = r.coeff_of(var, dr);
        // r <- r*lb - b * lr * x_var^(dr-db)
        r = r.mul(&lb).sub(&b.mul(&lr.mul_var_pow(var, dr - db)));
        if !r.is_zero() {
            let content = r.int_content();
            if !content.is_one() {
                r = r.div_int(&content);
            }
        }
    }
    r
}

/// Fast sound coprimality certificate: project to one variable at a time by
/// evaluating the others at small integers and take univariate gcds. If every
/// variable's projected gcd is constant (with degrees preserved by the
/// evaluation), the multivariate gcd of the primitive inputs is 1. Failure to
/// certify falls back to the full remainder sequence.
fn certified_coprime(f: &ZPoly, g: &ZPoly) -> bool {
    let nvars = f.nvars.max(g.nvars);
    'vars: for var in 0..nvars {
        let df = f.degree_in(var);
        let dg = g.degree_in(var);
        if df == 0 || dg == 0 {
            // The gcd has degree 0 in any variable missing from one input.
            continue;
        }
        for attempt in 0..4u64 {
            let fu = project_univariate(f, var, attempt);
            let gu = project_univariate(g, var, attempt);
            let degree_kept = fu.len() == df as usize + 1 && gu.len() == dg as usize + 1;
            if degree_kept && univariate_gcd_degree(fu, gu) == 0 {
                continue 'vars;
            }
        }
        return false;
    }
    true
}

/// Coefficients of `f` as a univariate polynomial in `var` after evaluating
/// every other variable at a small odd integer; trailing zero coefficients
/// trimmed, so `len() - 1` is the projected degree.
fn project_univariate(f: &ZPoly, var: usize, salt: u64) -> Vec<BigInt> {
    let nvars = f.nvars;
    let point: Vec<BigInt> = (0..nvars)
        .map(|i| BigInt::from(2 * ((i as u64 + 3 * salt + 1) % 7 + 1) + 1))
        .collect();
    let mut coeffs = alloc::vec![BigInt::zero(); f.degree_in(var) as usize + 1];
    for (exp, c) in &f.terms {
        let mut value = c.clone();
        for i in 0..nvars {
            if i == var {
                continue;
            }
            for _ in 0..exp.get(i) {
                value *= &point[i];
            }
        }
        coeffs[exp.get(var) as usize] += value;
    }
    while coeffs.len() > 1 && coeffs.last().map_or(false, Zero::is_zero) {
        coeffs.pop();
    }
    if coeffs.len() == 1 && coeffs[0].is_zero() {
        coeffs.clear();
    }
    coeffs
}

/// Degree of the gcd of two univariate integer polynomials (primitive
/// Euclidean remainder sequence).
fn univariate_gcd_degree(mut a: Vec<BigInt>, mut b: Vec<BigInt>) -> usize {
    let strip = |v: &mut Vec<BigInt>| {
        while v.last().map_or(false, Zero::is_zero) {
            v.pop();
        }
        let content = v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if !content.is_zero() && !content.is_one() {
            for c in v.iter_mut() {
                *c = &*c / &content;
            }
        }
    };
    strip(&mut a);
    strip(&mut b);
    loop {
        if a.is_empty() {
            return b.len().saturating_sub(1);
        }
        if b.is_empty() {
            return a.len().saturating_sub(1);
        }
        if a.len() < b.len() {
            core::mem::swap(&mut a, &mut b);
        }
        // a <- lc(b)*a - lc(a)*x^(da-db)*b, repeated until deg drops.
        let shift = a.len() - b.len();
        let la = a.last().unwrap().clone();
        let lb = b.last().unwrap().clone();
        for c in a.iter_mut() {
            *c = &*c * &lb;
        }
        for (i, c) in b.iter().enumerate() {
            a[i + shift] -= c * &la;
        }
        strip(&mut a);
    }
}

/// Gcd of integer polynomials, primitive with positive lex-leading sign.
///
/// Strategy: certify coprimality cheaply when possible, then try the
/// heuristic evaluation gcd (integer substitution per variable, balanced
/// digit reconstruction, trial-division verification), and fall back to the
/// content/primitive-part remainder sequence, which is always correct.
fn gcd_z(f: &ZPoly, g: &ZPoly) -> ZPoly {
    if f.is_zero() {
        return normalize_primitive(g);
    }
    if g.is_zero() {
        return normalize_primitive(f);
    }
    match main_variable(f, g) {
        None => {
            // Both constant.
            let a = f.terms.values().next().unwrap();
            let b = g.terms.values().next().unwrap();
            ZPoly::constant(f.nvars, a.gcd(b))
        }
        Some(var) => {
            if certified_coprime(f, g) {
                return ZPoly::constant(f.nvars.max(g.nvars), BigInt::one());
            }
            if let Some(h) = heuristic_gcd(f, g) {
                return normalize_primitive(&h);
            }
            gcd_prs(f, g, var)
        }
    }
}

/// Content/primitive-part reduction with a primitive pseudo-remainder
/// sequence in `var`; the reliable fallback route.
fn gcd_prs(f: &ZPoly, g: &ZPoly, var: usize) -> ZPoly {
    let cf = f.content_in(var);
    let cg = g.content_in(var);
    let c = gcd_z(&cf, &cg);
    let pf = f.exact_div(&cf);
    let pg = g.exact_div(&cg);
    let (mut a, mut b) = if pf.degree_in(var) >= pg.degree_in(var) {
        (pf, pg)
    } else {
        (pg, pf)
    };
    loop {
        let r = pseudo_rem(&a, &b, var);
        if r.is_zero() {
            break;
        }
        let rp = r.exact_div(&r.content_in(var));
        a = b;
        b = rp;
    }
    normalize_primitive(&c.mul(&b))
}

/// Heuristic gcd: evaluate the main variable at a large integer, take the gcd
/// one level down, lift it back by balanced base-xi digits, and verify by
/// exact division. A `Some` answer is proven correct; `None` means the
/// heuristic gave up.
fn heuristic_gcd(f: &ZPoly, g: &ZPoly) -> Option<ZPoly> {
    let norm = |p: &ZPoly| p.terms.values().map(|c| c.abs()).max().unwrap_or_else(BigInt::zero);
    let mut xi = BigInt::from(2) * norm(f).min(norm(g)) + BigInt::from(29);
    for _ in 0..6 {
        if let Some(h) = heuristic_gcd_at(f, g, &xi, 0) {
            return Some(h);
        }
        // Grow the evaluation point irrationally-ish to dodge unlucky points.
        xi = (&xi * BigInt::from(73794u32)) / BigInt::from(27011u32) + BigInt::from(1);
    }
    None
}

fn heuristic_gcd_at(f: &ZPoly, g: &ZPoly, xi: &BigInt, depth: usize) -> Option<ZPoly> {
    if depth > 8 {
        return None;
    }
    debug_assert!(!f.is_zero() && !g.is_zero());
    let Some(var) = main_variable(f, g) else {
        let a = f.terms.values().next().unwrap();
        let b = g.terms.values().next().unwrap();
        return Some(ZPoly::constant(f.nvars, a.gcd(b)));
    };
    // Vary the point across levels so differences of variables do not vanish
    // systematically.
    let xi = xi + BigInt::from(4999u32) * BigInt::from(depth as u32);
    let xi = &xi;
    let degree_bound = f.degree_in(var).min(g.degree_in(var));
    let fe = f.eval_var(var, xi);
    let ge = g.eval_var(var, xi);
    if fe.is_zero() || ge.is_zero() {
        // Unlucky evaluation point.
        return None;
    }
    let image = heuristic_gcd_at(&fe, &ge, xi, depth + 1)?;
    // Lift: balanced base-xi digits of the image are the coefficients of the
    // candidate in `var`.
    let mut h = ZPoly::zero(f.nvars.max(g.nvars));
    let mut carry = image;
    let mut power = 0u32;
    let half = xi / BigInt::from(2);
    while !carry.is_zero() {
        if power > degree_bound {
            return None;
        }
        let mut digit = ZPoly::zero(carry.nvars);
        let mut rest = ZPoly::zero(carry.nvars);
        for (exp, c) in &carry.terms {
            let mut r = c.mod_floor(xi);
            if r > half {
                r -= xi;
            }
            let q = (c - &r) / xi;
            digit.add_term(exp.clone(), r);
            rest.add_term(exp.clone(), q);
        }
        h = h.add(&digit.mul_var_pow(var, power));
        carry = rest;
        power += 1;
    }
    if h.is_zero() {
        return None;
    }
    let h = normalize_primitive(&h);
    // Verification makes the heuristic sound: h must divide both inputs and
    // the cofactors must be certifiably coprime, so h is maximal.
    let qf = f.try_exact_div(&h)?;
    let qg = g.try_exact_div(&h)?;
    if certified_coprime(&qf, &qg) {
        Some(h)
    } else {
        None
    }
}

fn normalize_primitive(f: &ZPoly) -> ZPoly {
    if f.is_zero() {
        return f.clone();
    }
    let mut content = f.int_content();
    if f.lex_leading_sign() < 0 {
        content = -content;
    }
    f.div_int(&content)
}

/// Clear denominators and strip integer content: a primitive integer
/// polynomial that is a unit multiple of `f` in `Q[X]`.
fn primitive_int(f: &MultiPoly) -> ZPoly {
    // Arity of the working copy follows the declared arity.
    let mut denom_lcm = BigInt::one();
    for (_, c) in f.terms() {
        denom_lcm = denom_lcm.lcm(c.denom());
    }
    let mut z = ZPoly::zero(f.nvars());
    for (e, c) in f.terms() {
        let scaled = c * Rational::from(denom_lcm.clone());
        debug_assert!(scaled.is_integer());
        z.add_term(e.clone(), scaled.to_integer());
    }
    normalize_primitive(&z)
}

fn to_multipoly(z: &ZPoly) -> MultiPoly {
    MultiPoly::from_terms(
        z.nvars,
        z.terms.iter().map(|(e, c)| (e.clone(), Rational::from(c.clone()))),
    )
}

/// Gcd in `Q[X]`, returned as the primitive integer representative with
/// positive lex-leading coefficient. `gcd(0, 0) = 0` and `gcd(f, 0) ~ f`.
pub fn gcd(f: &MultiPoly, g: &MultiPoly) -> MultiPoly {
    if f.is_zero() && g.is_zero() {
        return MultiPoly::zero(f.nvars().max(g.nvars()));
    }
    if f.is_zero() {
        return to_multipoly(&primitive_int(g));
    }
    if g.is_zero() {
        return to_multipoly(&primitive_int(f));
    }
    let zf = primitive_int(f);
    let zg = primitive_int(g);
    to_multipoly(&gcd_z(&zf, &zg))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn x(n: usize, i: usize) -> MultiPoly {
        MultiPoly::variable(n, i)
    }


    #[test]
    fn gcd_of_coprime_is_one() {
        let f = x(2, 0);
        let g = x(2, 1);
        assert!(gcd(&f, &g).is_one());
    }

    #[test]
    fn gcd_recovers_common_factor() {
        // f = (x1+1)*(x2-2), g = (x1+1)*x1 -> gcd = x1+1
        let common = x(2, 0).add(&MultiPoly::one(2));
        let f = common.mul(&x(2, 1).sub(&MultiPoly::constant(2, rat(2, 1))));
        let g = common.mul(&x(2, 0));
        assert_eq!(gcd(&f, &g), common);
    }

    #[test]
    fn gcd_ignores_rational_scaling() {
        let common = x(2, 0).add(&x(2, 1));
        let f = common.scale(&rat(3, 7));
        let g = common.scale(&rat(-5, 2)).mul(&x(2, 1));
        assert_eq!(gcd(&f, &g), common);
    }

    #[test]
    fn gcd_with_zero() {
        let f = x(1, 0).scale(&rat(-4, 6));
        // primitive positive representative of -2/3*x1 is x1
        assert_eq!(gcd(&f, &MultiPoly::zero(1)), x(1, 0));
        assert!(gcd(&MultiPoly::zero(1), &MultiPoly::zero(1)).is_zero());
    }

    #[test]
    fn gcd_univariate_repeated_roots() {
        // f = (x-1)^2 (x+2), g = (x-1)(x+2)^2 -> gcd = (x-1)(x+2)
        let xm1 = x(1, 0).sub(&MultiPoly::one(1));
        let xp2 = x(1, 0).add(&MultiPoly::constant(1, rat(2, 1)));
        let f = xm1.mul(&xm1).mul(&xp2);
        let g = xm1.mul(&xp2).mul(&xp2);
        assert_eq!(gcd(&f, &g), xm1.mul(&xp2));
    }

    #[test]
    fn gcd_three_variables() {
        let c = x(3, 0).mul(&x(3, 2)).add(&x(3, 1));
        let f = c.mul(&x(3, 0).add(&x(3, 2)));
        let g = c.mul(&x(3, 1).sub(&MultiPoly::constant(3, rat(1, 3))));
        assert_eq!(gcd(&f, &g), c);
    }
}
