use std::cmp::Ordering;
use std::fmt;
use std::hash::{BuildHasherDefault, Hasher};

use serde::{Deserialize, Serialize};

/// Maximum number of ring variables. The largest ring built by the pipelines
/// (graph of a map P^5 ⇢ P^13 plus one auxiliary variable) has 21.
pub const MAX_VARS: usize = 28;

/// A monomial `x^e` tagged with a free-module component. Ideal computations
/// always use component 0. `deg` caches the weighted degree of `x^e`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Mono {
    exps: [u8; MAX_VARS],
    comp: u16,
    deg: u16,
}

impl Mono {
    pub const ONE: Mono = Mono {
        exps: [0; MAX_VARS],
        comp: 0,
        deg: 0,
    };

    /// Builds a monomial; `weights` must have the same length as `exps`.
    pub fn new(exps: &[u32], weights: &[u16]) -> Mono {
        assert!(exps.len() <= MAX_VARS, "too many variables");
        let mut m = Mono::ONE;
        let mut deg = 0u32;
        for (i, (&e, &w)) in exps.iter().zip(weights).enumerate() {
            assert!(e <= u8::MAX as u32, "exponent {e} exceeds 255");
            m.exps[i] = e as u8;
            deg += e * w as u32;
        }
        assert!(deg < (1 << 15), "degree {deg} too large");
        m.deg = deg as u16;
        m
    }

    #[inline]
    pub fn exps(&self) -> &[u8; MAX_VARS] {
        &self.exps
    }

    #[inline]
    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i] as u32
    }

    #[inline]
    pub fn comp(&self) -> usize {
        self.comp as usize
    }

    #[inline]
    pub fn with_comp(mut self, comp: usize) -> Mono {
        self.comp = comp as u16;
        self
    }

    /// Weighted degree.
    #[inline]
    pub fn deg(&self) -> u32 {
        self.deg as u32
    }

    /// Unweighted total degree.
    pub fn total_degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Product; the component of the result is that of whichever factor
    /// carries one.
    #[inline]
    pub fn mul(&self, other: &Mono) -> Mono {
        let mut out = Mono::ONE;
        let mut overflow = false;
        for i in 0..MAX_VARS {
            let (s, o) = self.exps[i].overflowing_add(other.exps[i]);
            out.exps[i] = s;
            overflow |= o;
        }
        assert!(!overflow, "monomial exponent overflow");
        out.comp = self.comp.max(other.comp);
        out.deg = self.deg + other.deg;
        out
    }

    /// Exponent-wise divisibility, ignoring components.
    #[inline]
    pub fn divides(&self, other: &Mono) -> bool {
        self.deg <= other.deg && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `self / other`; caller guarantees divisibility. Keeps `self`'s component.
    #[inline]
    pub fn div(&self, other: &Mono) -> Mono {
        debug_assert!(other.divides(self));
        let mut out = Mono::ONE;
        for i in 0..MAX_VARS {
            out.exps[i] = self.exps[i] - other.exps[i];
        }
        out.comp = self.comp;
        out.deg = self.deg - other.deg;
        out
    }

    /// Least common multiple; `weights` is needed to recompute the degree.
    pub fn lcm(&self, other: &Mono, weights: &[u16]) -> Mono {
        let mut out = Mono::ONE;
        let mut deg = 0u32;
        for (i, &w) in weights.iter().enumerate() {
            let e = self.exps[i].max(other.exps[i]);
            out.exps[i] = e;
            deg += e as u32 * w as u32;
        }
        out.comp = self.comp;
        out.deg = deg as u16;
        out
    }

    pub fn gcd(&self, other: &Mono, weights: &[u16]) -> Mono {
        let mut out = Mono::ONE;
        let mut deg = 0u32;
        for (i, &w) in weights.iter().enumerate() {
            let e = self.exps[i].min(other.exps[i]);
            out.exps[i] = e;
            deg += e as u32 * w as u32;
        }
        out.deg = deg as u16;
        out
    }

    pub fn is_coprime(&self, other: &Mono) -> bool {
        self.exps
            .iter()
            .zip(other.exps.iter())
            .all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Bitmask of variables with nonzero exponent (variables ≥ 32 fold over).
    #[inline]
    pub fn support_mask(&self) -> u32 {
        let mut m = 0u32;
        for (i, &e) in self.exps.iter().enumerate() {
            if e != 0 {
                m |= 1 << (i % 32);
            }
        }
        m
    }
}

impl fmt::Debug for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let last = self.exps.iter().rposition(|&e| e != 0).map_or(0, |i| i + 1);
        write!(f, "{:?}@{}", &self.exps[..last], self.comp)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", content = "k")]
pub enum MonomialOrder {
    GrevLex,
    Lex,
    /// Block order eliminating the first `k` variables: the unweighted
    /// degree in those variables is compared first, then graded reverse lex.
    BlockElim(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ModuleOrderKind {
    TermOverPosition,
    PositionOverTerm,
    /// Component 0 dominates every other component; the remaining
    /// components are compared term over position. Used to read off syzygies.
    ZeroThenTerm,
}

/// How module monomials `m·e_i` are compared. `shifts[i]` is the degree of
/// the basis vector `e_i`; lower component indices rank higher on ties.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleOrder {
    pub kind: ModuleOrderKind,
    pub shifts: Vec<u32>,
}

impl ModuleOrder {
    pub fn shift(&self, comp: usize) -> u32 {
        self.shifts.get(comp).copied().unwrap_or(0)
    }
}

#[inline]
fn grevlex_tail(a: &Mono, b: &Mono, nvars: usize) -> Ordering {
    for i in (0..nvars).rev() {
        let (x, y) = (a.exps[i], b.exps[i]);
        if x != y {
            return y.cmp(&x);
        }
    }
    Ordering::Equal
}

/// Compares the term parts of two monomials, with `da`/`db` their degrees
/// including any module shift.
#[inline]
fn cmp_terms(order: MonomialOrder, nvars: usize, a: &Mono, b: &Mono, da: u32, db: u32) -> Ordering {
    match order {
        MonomialOrder::GrevLex => da.cmp(&db).then_with(|| grevlex_tail(a, b, nvars)),
        MonomialOrder::Lex => a.exps[..nvars].cmp(&b.exps[..nvars]),
        MonomialOrder::BlockElim(k) => {
            let ba: u32 = a.exps[..k].iter().map(|&e| e as u32).sum();
            let bb: u32 = b.exps[..k].iter().map(|&e| e as u32).sum();
            ba.cmp(&bb)
                .then_with(|| da.cmp(&db))
                .then_with(|| grevlex_tail(a, b, nvars))
        }
    }
}

/// Total order on (module) monomials; `Greater` means `a` ranks higher.
#[inline]
pub fn cmp_mono(
    order: MonomialOrder,
    nvars: usize,
    module: Option<&ModuleOrder>,
    a: &Mono,
    b: &Mono,
) -> Ordering {
    match module {
        None => cmp_terms(order, nvars, a, b, a.deg(), b.deg()).then_with(|| b.comp.cmp(&a.comp)),
        Some(mo) => {
            let da = a.deg() + mo.shift(a.comp());
            let db = b.deg() + mo.shift(b.comp());
            match mo.kind {
                ModuleOrderKind::TermOverPosition => {
                    cmp_terms(order, nvars, a, b, da, db).then_with(|| b.comp.cmp(&a.comp))
                }
                ModuleOrderKind::PositionOverTerm => b
                    .comp
                    .cmp(&a.comp)
                    .then_with(|| cmp_terms(order, nvars, a, b, da, db)),
                ModuleOrderKind::ZeroThenTerm => (a.comp == 0)
                    .cmp(&(b.comp == 0))
                    .then_with(|| cmp_terms(order, nvars, a, b, da, db))
                    .then_with(|| b.comp.cmp(&a.comp)),
            }
        }
    }
}

/// Multiplicative FxHash-style hasher; monomials are hashed constantly during
/// reduction and SipHash dominates profiles otherwise.
#[derive(Default, Clone, Copy)]
pub struct FxHasher {
    hash: u64,
}

const SEED: u64 = 0x51_7c_c1_b7_27_22_0a_95;

impl Hasher for FxHasher {
    #[inline]
    fn write(&mut self, bytes: &[u8]) {
        let mut chunks = bytes.chunks_exact(8);
        for c in &mut chunks {
            let v = u64::from_le_bytes(c.try_into().unwrap());
            self.hash = (self.hash.rotate_left(5) ^ v).wrapping_mul(SEED);
        }
        for &b in chunks.remainder() {
            self.hash = (self.hash.rotate_left(5) ^ b as u64).wrapping_mul(SEED);
        }
    }
    #[inline]
    fn write_u16(&mut self, i: u16) {
        self.hash = (self.hash.rotate_left(5) ^ i as u64).wrapping_mul(SEED);
    }
    #[inline]
    fn write_u32(&mut self, i: u32) {
        self.hash = (self.hash.rotate_left(5) ^ i as u64).wrapping_mul(SEED);
    }
    #[inline]
    fn write_u64(&mut self, i: u64) {
        self.hash = (self.hash.rotate_left(5) ^ i).wrapping_mul(SEED);
    }
    #[inline]
    fn write_usize(&mut self, i: usize) {
        self.write_u64(i as u64);
    }
    #[inline]
    fn finish(&self) -> u64 {
        self.hash
    }
}

pub type FxBuild = BuildHasherDefault<FxHasher>;
pub type FxHashMap<K, V> = std::collections::HashMap<K, V, FxBuild>;
