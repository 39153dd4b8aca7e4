//! Hilbert series of `R/M` for monomial ideals `M`, and the dimension,
//! degree and Hilbert polynomial read from it.

use std::collections::HashMap;

use crate::poly::Mono;

/// Hilbert series `N(t) / (1-t)^n` of `R/M` in a standard-graded ring with
/// `n` variables; `N` has integer coefficients indexed by degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertSeries {
    pub numerator: Vec<i128>,
    pub nvars: usize,
}

fn trim(p: &mut Vec<i128>) {
    while p.len() > 1 && *p.last().unwrap() == 0 {
        p.pop();
    }
}

fn poly_mul(a: &[i128], b: &[i128]) -> Vec<i128> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if *x == 0 {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_add_shift(a: &mut Vec<i128>, b: &[i128], shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, 0);
    }
    for (j, y) in b.iter().enumerate() {
        a[j + shift] += y;
    }
}

fn minimalize(mut gens: Vec<Mono>) -> Vec<Mono> {
    gens.sort_by_key(|m| (m.deg(), *m.exps()));
    gens.dedup();
    let mut out: Vec<Mono> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

struct Numerator<'a> {
    nvars: usize,
    weights: &'a [u16],
    memo: HashMap<Vec<Mono>, Vec<i128>>,
}

impl Numerator<'_> {
    fn pure(&self, exps: &[u32]) -> Mono {
        Mono::new(exps, self.weights)
    }

    fn compute(&mut self, gens: Vec<Mono>) -> Vec<i128> {
        if gens.is_empty() {
            return vec![1];
        }
        if gens.iter().any(|g| g.is_one()) {
            return vec![0];
        }
        // pairwise coprime generators give a product of (1 - t^deg)
        let mut seen = vec![0u32; self.nvars];
        let mut coprime = true;
        for g in &gens {
            for (i, s) in seen.iter_mut().enumerate() {
                if g.exp(i) > 0 {
                    *s += 1;
                    if *s > 1 {
                        coprime = false;
                    }
                }
            }
        }
        if coprime {
            let mut acc = vec![1i128];
            for g in &gens {
                let mut f = vec![0i128; g.deg() as usize + 1];
                f[0] = 1;
                f[g.deg() as usize] -= 1;
                acc = poly_mul(&acc, &f);
            }
            trim(&mut acc);
            return acc;
        }
        if let Some(v) = self.memo.get(&gens) {
            return v.clone();
        }
        // pivot: the most frequent variable, raised to the median exponent
        let x = (0..self.nvars).max_by_key(|&i| (seen[i], std::cmp::Reverse(i))).unwrap();
        let mut es: Vec<u32> = gens.iter().map(|g| g.exp(x)).filter(|&e| e > 0).collect();
        es.sort_unstable();
        let e = es[(es.len() - 1) / 2];
        let mut pe = vec![0u32; self.nvars];
        pe[x] = e;
        let p = self.pure(&pe);

        let mut plus: Vec<Mono> = gens.iter().filter(|g| !p.divides(g)).copied().collect();
        plus.push(p);
        let plus = minimalize(plus);
        let colon: Vec<Mono> = gens
            .iter()
            .map(|g| {
                let mut ex: Vec<u32> = (0..self.nvars).map(|i| g.exp(i)).collect();
                ex[x] = ex[x].saturating_sub(e);
                self.pure(&ex)
            })
            .collect();
        let colon = minimalize(colon);

        let mut out = self.compute(plus);
        let rest = self.compute(colon);
        poly_add_shift(&mut out, &rest, p.deg() as usize);
        trim(&mut out);
        self.memo.insert(gens, out.clone());
        out
    }
}

/// Numerator of the (weighted) Hilbert series of `R/(gens)` over the
/// denominator `∏ (1 - t^{w_i})`.
pub fn numerator(gens: &[Mono], weights: &[u16]) -> Vec<i128> {
    let gens: Vec<Mono> = gens.iter().map(|m| m.with_comp(0)).collect();
    let mut n = Numerator {
        nvars: weights.len(),
        weights,
        memo: HashMap::new(),
    };
    let mut out = n.compute(minimalize(gens));
    trim(&mut out);
    out
}

fn binom(n: i128, r: usize) -> i128 {
    // generalized binomial n(n-1)...(n-r+1)/r!, exact for integer n
    let mut num = 1i128;
    for k in 0..r as i128 {
        num = num * (n - k) / (k + 1);
    }
    num
}

impl HilbertSeries {
    pub fn from_leads(leads: &[Mono], nvars: usize) -> Self {
        HilbertSeries {
            numerator: numerator(leads, &vec![1; nvars]),
            nvars,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.iter().all(|&c| c == 0)
    }

    /// `(c, Q)` with `N(t) = (1-t)^c Q(t)` and `Q(1) != 0`.
    fn split(&self) -> (usize, Vec<i128>) {
        let mut q = self.numerator.clone();
        let mut c = 0;
        while q.iter().sum::<i128>() == 0 && q.iter().any(|&x| x != 0) {
            // divide by (1 - t): q = (1-t) r  ⇒  r_k = Σ_{j≤k} q_j
            let mut r = Vec::with_capacity(q.len() - 1);
            let mut acc = 0;
            for &x in &q[..q.len() - 1] {
                acc += x;
                r.push(acc);
            }
            q = r;
            c += 1;
        }
        (c, q)
    }

    /// Krull dimension of `R/M`.
    pub fn krull_dim(&self) -> usize {
        if self.is_zero() {
            return 0;
        }
        self.nvars - self.split().0
    }

    /// Projective dimension and degree; the empty scheme gives `(-1, 0)`.
    pub fn dim_degree(&self) -> (i64, i64) {
        if self.is_zero() {
            return (-1, 0);
        }
        let (c, q) = self.split();
        let d = self.nvars - c;
        if d == 0 {
            return (-1, 0);
        }
        (d as i64 - 1, q.iter().sum::<i128>() as i64)
    }

    /// `dim_K (R/M)_t`.
    pub fn hilbert_function(&self, t: i64) -> i128 {
        if t < 0 {
            return 0;
        }
        let n = self.nvars;
        self.numerator
            .iter()
            .enumerate()
            .filter(|(k, _)| (*k as i64) <= t)
            .map(|(k, &a)| a * binom((t - k as i64 + n as i64 - 1) as i128, n - 1))
            .sum()
    }

    /// Value of the Hilbert polynomial at `t` (any integer).
    pub fn hilbert_polynomial_at(&self, t: i64) -> i128 {
        if self.is_zero() {
            return 0;
        }
        let (c, q) = self.split();
        let d = self.nvars - c;
        if d == 0 {
            return 0;
        }
        q.iter()
            .enumerate()
            .map(|(k, &a)| a * binom(t as i128 - k as i128 + d as i128 - 1, d - 1))
            .sum()
    }

    /// Whether the Hilbert polynomial equals `Σ coeffs[i] t^i / denom`.
    pub fn hilbert_polynomial_is(&self, coeffs: &[i128], denom: i128) -> bool {
        let deg = if self.is_zero() { 0 } else { self.krull_dim().max(1) };
        let npts = deg.max(coeffs.len()) + 1;
        (0..npts as i64).all(|t| {
            let v: i128 = coeffs.iter().rev().fold(0, |acc, &c| acc * t as i128 + c);
            v == self.hilbert_polynomial_at(t) * denom
        })
    }
}

/// `dim_K R_t` for `n` standard-graded variables.
pub fn monomial_count(n: usize, t: i64) -> i128 {
    if t < 0 {
        return 0;
    }
    binom(t as i128 + n as i128 - 1, n - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Mono {
        Mono::new(e, &vec![1; e.len()])
    }

    /// Count standard monomials degree by degree.
    fn brute_hf(leads: &[Mono], n: usize, t: u32) -> i128 {
        fn rec(i: usize, left: u32, e: &mut Vec<u32>, leads: &[Mono], count: &mut i128) {
            if i == e.len() - 1 {
                e[i] = left;
                let mono = Mono::new(e, &vec![1; e.len()]);
                if !leads.iter().any(|l| l.divides(&mono)) {
                    *count += 1;
                }
                return;
            }
            for k in 0..=left {
                e[i] = k;
                rec(i + 1, left - k, e, leads, count);
            }
        }
        let mut count = 0;
        rec(0, t, &mut vec![0; n], leads, &mut count);
        count
    }

    #[test]
    fn twisted_cubic_leads() {
        // grevlex leads of the twisted cubic: x1^2, x1x2, x2^2
        let leads = [m(&[0, 2, 0, 0]), m(&[0, 1, 1, 0]), m(&[0, 0, 2, 0])];
        let hs = HilbertSeries::from_leads(&leads, 4);
        assert_eq!(hs.dim_degree(), (1, 3));
        assert!(hs.hilbert_polynomial_is(&[1, 3], 1));
        for t in 0..8 {
            assert_eq!(hs.hilbert_function(t), brute_hf(&leads, 4, t as u32));
        }
    }

    #[test]
    fn degenerate_cases() {
        assert_eq!(HilbertSeries::from_leads(&[], 6).dim_degree(), (5, 1));
        assert_eq!(HilbertSeries::from_leads(&[Mono::ONE], 6).dim_degree(), (-1, 0));
        let irrelevant: Vec<Mono> = (0..3).map(|i| {
            let mut e = vec![0; 3];
            e[i] = 2;
            m(&e)
        }).collect();
        assert_eq!(HilbertSeries::from_leads(&irrelevant, 3).dim_degree(), (-1, 0));
    }

    #[test]
    fn fit_against_brute_force() {
        let leads = [m(&[2, 1, 0, 0]), m(&[0, 3, 1, 0]), m(&[1, 0, 2, 1]), m(&[0, 0, 0, 4]), m(&[1, 1, 1, 0])];
        let hs = HilbertSeries::from_leads(&leads, 4);
        for t in 0..14 {
            assert_eq!(hs.hilbert_function(t), brute_hf(&leads, 4, t as u32), "t = {t}");
        }
        // fit: large t values agree with the polynomial
        for t in 10..14 {
            assert_eq!(hs.hilbert_function(t), hs.hilbert_polynomial_at(t));
        }
    }
}
