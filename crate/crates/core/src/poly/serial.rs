//! Text and JSON forms of polynomials.
//!
//! Text: terms `coeff*x0^a0*x3^a3` joined by `+` or `-`; unit
//! coefficients, zero exponents and `^1` are left out. The parser also
//! accepts explicit `1*`, `^1`, `+-` and whitespace.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{Poly, Ring};
use crate::error::{Error, Result};
use crate::field::{Field, FieldDesc};

pub fn to_text<F: Field>(p: &Poly<F>) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let ring = p.ring();
    let field = p.field();
    let mut out = String::new();
    for (k, (c, m)) in p.terms().iter().enumerate() {
        let coeff = field.format(c);
        let (neg, abs) = match coeff.strip_prefix('-') {
            Some(a) => (true, a.to_string()),
            None => (false, coeff),
        };
        if neg {
            out.push('-');
        } else if k > 0 {
            out.push('+');
        }
        let mut factors = Vec::new();
        if abs != "1" || m.total_degree() == 0 {
            factors.push(abs);
        }
        for i in 0..ring.nvars() {
            match m.exp(i) {
                0 => {}
                1 => factors.push(ring.names()[i].clone()),
                e => factors.push(format!("{}^{e}", ring.names()[i])),
            }
        }
        out.push_str(&factors.join("*"));
    }
    out
}

pub fn parse_text<F: Field>(ring: &Arc<Ring<F>>, text: &str) -> Result<Poly<F>> {
    let field = ring.field();
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    // split into signed terms, keeping '/' and '^' content intact
    let mut terms_src: Vec<(bool, String)> = Vec::new();
    let mut cur = String::new();
    let mut neg = false;
    for (i, ch) in s.chars().enumerate() {
        if (ch == '+' || ch == '-') && i > 0 && !cur.is_empty() && !cur.ends_with('^') {
            terms_src.push((neg, std::mem::take(&mut cur)));
            neg = ch == '-';
        } else if (ch == '+' || ch == '-') && cur.is_empty() {
            if ch == '-' {
                neg = !neg;
            }
        } else {
            cur.push(ch);
        }
    }
    if cur.is_empty() {
        return Err(Error::Parse(format!("trailing sign in {text:?}")));
    }
    terms_src.push((neg, cur));

    let mut terms = Vec::with_capacity(terms_src.len());
    for (neg, src) in terms_src {
        let mut coeff = field.one();
        let mut exps = vec![0u32; ring.nvars()];
        for factor in src.split('*') {
            if factor.is_empty() {
                return Err(Error::Parse(format!("empty factor in {src:?}")));
            }
            if factor.starts_with(|c: char| c.is_ascii_digit()) {
                coeff = field.mul(&coeff, &field.parse(factor)?);
                continue;
            }
            let (name, e) = match factor.split_once('^') {
                Some((n, e)) => (
                    n,
                    e.parse::<u32>()
                        .map_err(|_| Error::Parse(format!("bad exponent in {factor:?}")))?,
                ),
                None => (factor, 1),
            };
            let idx = ring
                .names()
                .iter()
                .position(|v| v == name)
                .ok_or_else(|| Error::Parse(format!("unknown variable {name:?}")))?;
            exps[idx] += e;
        }
        if neg {
            coeff = field.neg(&coeff);
        }
        if exps.iter().any(|&e| e > 255) {
            return Err(Error::Parse("exponent exceeds 255".into()));
        }
        terms.push((coeff, ring.mono(&exps)));
    }
    Ok(Poly::from_terms(ring, terms))
}

/// JSON form `{"field":{"char":0},"vars":[...],"terms":[["3",[2,0,...]],...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub field: FieldDesc,
    pub vars: Vec<String>,
    pub terms: Vec<(String, Vec<u32>)>,
}

pub fn to_json<F: Field>(p: &Poly<F>) -> PolyJson {
    let ring = p.ring();
    let field = p.field();
    PolyJson {
        field: field.desc(),
        vars: ring.names().to_vec(),
        terms: p
            .terms()
            .iter()
            .map(|(c, m)| (field.format(c), (0..ring.nvars()).map(|i| m.exp(i)).collect()))
            .collect(),
    }
}

/// Reads a polynomial into `ring`. A polynomial over ℚ may be read into a
/// ring over `F_p`, which reduces it (an error if a denominator vanishes).
pub fn from_json<F: Field>(ring: &Arc<Ring<F>>, j: &PolyJson) -> Result<Poly<F>> {
    let field = ring.field();
    if j.field != field.desc() && j.field != FieldDesc::RATIONALS {
        return Err(Error::RingMismatch(format!(
            "polynomial over {:?} read into ring over {:?}",
            j.field,
            field.desc()
        )));
    }
    if j.vars != ring.names() {
        return Err(Error::RingMismatch("variable names differ".into()));
    }
    let mut terms = Vec::with_capacity(j.terms.len());
    for (c, e) in &j.terms {
        if e.len() != ring.nvars() {
            return Err(Error::Parse("exponent vector length".into()));
        }
        if e.iter().any(|&x| x > 255) {
            return Err(Error::Parse("exponent exceeds 255".into()));
        }
        terms.push((field.parse(c)?, ring.mono(e)));
    }
    Ok(Poly::from_terms(ring, terms))
}

/// Moves a polynomial into another ring with the same variables, reducing
/// rational coefficients when the target has positive characteristic.
pub fn transfer<F: Field, G: Field>(ring: &Arc<Ring<G>>, p: &Poly<F>) -> Result<Poly<G>> {
    from_json(ring, &to_json(p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    #[test]
    fn text_roundtrip() {
        let r = Ring::indexed(Rationals, "x", 3);
        let p = parse_text(&r, "3*x0^2 - 1/2*x1*x2 + x2^2").unwrap();
        assert_eq!(to_text(&p), "3*x0^2-1/2*x1*x2+x2^2");
        assert_eq!(parse_text(&r, "3*x0^2+-1/2*x1^1*x2^1+1*x2^2").unwrap(), p);
        assert_eq!(parse_text(&r, &to_text(&p)).unwrap(), p);
        assert_eq!(to_text(&r.zero()), "0");
        assert!(parse_text(&r, "x9").is_err());
    }

    #[test]
    fn json_roundtrip_mod_p() {
        let f = PrimeField::new(32003).unwrap();
        let r = Ring::indexed(f, "x", 2);
        let p = parse_text(&r, "5*x0*x1-x1^3").unwrap();
        let j = to_json(&p);
        let s = serde_json::to_string(&j).unwrap();
        assert!(s.contains("\"char\":32003"));
        let back: PolyJson = serde_json::from_str(&s).unwrap();
        assert_eq!(from_json(&r, &back).unwrap(), p);
    }

    #[test]
    fn rational_json_reduces_mod_p() {
        let q = Ring::indexed(Rationals, "x", 2);
        let j = to_json(&parse_text(&q, "1/2*x0^2-3*x1^2").unwrap());
        let f = PrimeField::new(7).unwrap();
        let r = Ring::indexed(f, "x", 2);
        assert_eq!(from_json(&r, &j).unwrap(), parse_text(&r, "4*x0^2+4*x1^2").unwrap());
        let r3 = Ring::indexed(PrimeField::new(2).unwrap(), "x", 2);
        assert!(from_json(&r3, &j).is_err());
        // a polynomial over F_p is not lifted or moved to another prime
        let back = Ring::indexed(PrimeField::new(11).unwrap(), "x", 2);
        assert!(from_json(&back, &to_json(&parse_text(&r, "x0").unwrap())).is_err());
    }
}
