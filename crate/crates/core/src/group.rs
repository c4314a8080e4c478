//! Normal-form arithmetic for the catalog groups.
//!
//! Every catalog group is `<a> . T` where `<a>` is cyclic of order `2^ell`
//! and `T` is generated by at most three pairwise commuting tail
//! generators. A tail generator `t` acts on `<a>` by `a^t = a^lambda` and
//! squares to `a^s` with `a^s` central. An element is stored in the normal
//! form `a^e * t1^b1 * t2^b2 * t3^b3` with `0 <= e < 2^ell` and bits `bi`.
//!
//! Multiplication is collection in closed form:
//!
//! ```text
//! (a^e1 T1)(a^e2 T2) = a^(e1 + e2*lambda(T1) + sum of s_t over t in T1 & T2) * (T1 xor T2)
//! ```

use std::collections::VecDeque;
use std::fmt;

use crate::catalog::FamilyDescriptor;
use crate::error::{Error, Result};

/// Largest `ell` accepted by formula-level operations.
pub const MAX_ELL: u32 = 30;

/// Largest `ell` accepted by operations that enumerate group elements.
pub const EXHAUSTIVE_MAX_ELL: u32 = 6;

const TAIL_SLOTS: u32 = 3;

/// A group element in normal form.
///
/// The derived ordering is lexicographic on the exponent tuple
/// `(e, b1, b2, b3)`: tail generator `i` lives in bit `2 - i` of `tail`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element {
    exp: u32,
    tail: u8,
}

impl Element {
    pub const IDENTITY: Element = Element { exp: 0, tail: 0 };

    /// Exponent of the distinguished generator `a`.
    pub fn a_exponent(self) -> u32 {
        self.exp
    }

    /// Whether tail generator `i` (0-based, after `a`) occurs.
    pub fn tail_bit(self, i: usize) -> bool {
        i < TAIL_SLOTS as usize && self.tail & tail_mask(i) != 0
    }

    pub fn is_identity(self) -> bool {
        self == Self::IDENTITY
    }

    /// True when the element lies in `<a>`.
    pub fn in_cyclic_part(self) -> bool {
        self.tail == 0
    }
}

fn tail_mask(i: usize) -> u8 {
    1 << (TAIL_SLOTS as usize - 1 - i)
}

/// A tail generator: its name, the multiplier of its action on `<a>`, and
/// its square as an exponent of `a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TailGenerator {
    pub name: char,
    pub lambda: u32,
    pub square: u32,
}

/// A concrete catalog group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupInstance {
    descriptor: FamilyDescriptor,
    ell: u32,
    tails: Vec<TailGenerator>,
}

impl GroupInstance {
    /// Assembles an instance and runs the relation self-test.
    pub(crate) fn from_parts(
        descriptor: FamilyDescriptor,
        ell: u32,
        tails: Vec<TailGenerator>,
    ) -> Result<Self> {
        if ell == 0 || ell > MAX_ELL || tails.len() > TAIL_SLOTS as usize {
            return Err(Error::InvariantViolation(format!(
                "unsupported shape: ell = {ell}, {} tail generators",
                tails.len()
            )));
        }
        let g = GroupInstance {
            descriptor,
            ell,
            tails,
        };
        g.self_test()?;
        Ok(g)
    }

    fn self_test(&self) -> Result<()> {
        let m = self.modulus();
        let fail = |msg: String| Err(Error::InvariantViolation(msg));
        for t in &self.tails {
            let lam = u64::from(t.lambda);
            if lam % 2 == 0 || lam >= m || (lam * lam) % m != 1 % m {
                return fail(format!("{}: lambda {} is not an involutory unit", t.name, t.lambda));
            }
            // the square has to be central for collection to be valid
            if (u64::from(t.square) * lam) % m != u64::from(t.square) {
                return fail(format!("{}: square a^{} is not central", t.name, t.square));
            }
        }
        let a = self.a();
        if !self.pow(a, m as i64).is_identity() {
            return fail("a^(2^ell) != 1".into());
        }
        if m > 1 && self.pow(a, (m / 2) as i64).is_identity() {
            return fail("a has order below 2^ell".into());
        }
        let gens = self.generators();
        for (i, t) in self.tails.iter().enumerate() {
            let ti = gens[i + 1];
            if self.mul(ti, ti) != self.a_pow(i64::from(t.square)) {
                return fail(format!("{}^2 != a^{}", t.name, t.square));
            }
            if self.conj(a, ti) != self.a_pow(i64::from(t.lambda)) {
                return fail(format!("a^{} != a^{}", t.name, t.lambda));
            }
            for tj in &gens[i + 2..] {
                if self.mul(ti, *tj) != self.mul(*tj, ti) {
                    return fail("tail generators do not commute".into());
                }
            }
        }
        let mut probe = gens.clone();
        probe.push(self.mul(gens[gens.len() - 1], a));
        for &x in &probe {
            for &y in &probe {
                for &z in &probe {
                    if self.mul(self.mul(x, y), z) != self.mul(x, self.mul(y, z)) {
                        return fail("collection is not associative on generators".into());
                    }
                }
            }
        }
        Ok(())
    }

    pub fn descriptor(&self) -> FamilyDescriptor {
        self.descriptor
    }

    /// `log2 |a|`.
    pub fn ell(&self) -> u32 {
        self.ell
    }

    /// `|a| = 2^ell`.
    pub fn modulus(&self) -> u64 {
        1u64 << self.ell
    }

    /// Number of tail generators.
    pub fn rank(&self) -> usize {
        self.tails.len()
    }

    pub fn order(&self) -> u64 {
        self.modulus() << self.tails.len()
    }

    pub fn tails(&self) -> &[TailGenerator] {
        &self.tails
    }

    /// Exponent of `a0`, the unique involution of `<a>`.
    pub fn a0_exponent(&self) -> u32 {
        (self.modulus() / 2) as u32
    }

    pub fn generator_names(&self) -> Vec<char> {
        std::iter::once('a').chain(self.tails.iter().map(|t| t.name)).collect()
    }

    /// The distinguished generators, `a` first.
    pub fn generators(&self) -> Vec<Element> {
        let mut out = vec![self.a()];
        out.extend((0..self.tails.len()).map(|i| Element {
            exp: 0,
            tail: tail_mask(i),
        }));
        out
    }

    pub fn a(&self) -> Element {
        self.a_pow(1)
    }

    pub fn a0(&self) -> Element {
        self.a_pow(i64::from(self.a0_exponent()))
    }

    pub fn a_pow(&self, k: i64) -> Element {
        Element {
            exp: k.rem_euclid(self.modulus() as i64) as u32,
            tail: 0,
        }
    }

    /// A distinguished generator by name.
    pub fn generator(&self, name: char) -> Option<Element> {
        self.generator_names()
            .iter()
            .position(|&c| c == name)
            .map(|i| self.generators()[i])
    }

    /// Builds an element from its exponent tuple.
    pub fn element(&self, exponents: &[u32]) -> Result<Element> {
        if exponents.len() != self.tails.len() + 1 {
            return Err(Error::MalformedElement(format!(
                "expected {} exponents, got {}",
                self.tails.len() + 1,
                exponents.len()
            )));
        }
        if u64::from(exponents[0]) >= self.modulus() {
            return Err(Error::MalformedElement(format!(
                "a-exponent {} out of range 0..{}",
                exponents[0],
                self.modulus()
            )));
        }
        let mut tail = 0u8;
        for (i, &b) in exponents[1..].iter().enumerate() {
            match b {
                0 => {}
                1 => tail |= tail_mask(i),
                _ => {
                    return Err(Error::MalformedElement(format!(
                        "tail exponent {b} for {} is not a bit",
                        self.tails[i].name
                    )))
                }
            }
        }
        Ok(Element {
            exp: exponents[0],
            tail,
        })
    }

    pub fn exponents(&self, u: Element) -> Vec<u32> {
        let mut out = vec![u.exp];
        out.extend((0..self.tails.len()).map(|i| u32::from(u.tail_bit(i))));
        out
    }

    pub fn validate(&self, u: Element) -> Result<()> {
        let allowed: u8 = (0..self.tails.len()).map(tail_mask).fold(0, |m, b| m | b);
        if u64::from(u.exp) >= self.modulus() || u.tail & !allowed != 0 {
            return Err(Error::MalformedElement(format!(
                "{u:?} is not a normal form for {}",
                self.descriptor
            )));
        }
        Ok(())
    }

    fn tail_lambda(&self, tail: u8) -> u64 {
        let m = self.modulus();
        self.tails
            .iter()
            .enumerate()
            .filter(|(i, _)| tail & tail_mask(*i) != 0)
            .fold(1u64, |acc, (_, t)| (acc * u64::from(t.lambda)) % m)
    }

    fn tail_square(&self, tail: u8) -> u64 {
        self.tails
            .iter()
            .enumerate()
            .filter(|(i, _)| tail & tail_mask(*i) != 0)
            .map(|(_, t)| u64::from(t.square))
            .sum()
    }

    /// Product `uv` of two valid normal forms.
    #[inline]
    pub fn mul(&self, u: Element, v: Element) -> Element {
        let m = self.modulus();
        let e = u64::from(u.exp)
            + u64::from(v.exp) * self.tail_lambda(u.tail)
            + self.tail_square(u.tail & v.tail);
        Element {
            exp: (e % m) as u32,
            tail: u.tail ^ v.tail,
        }
    }

    /// Checked product.
    pub fn multiply(&self, u: Element, v: Element) -> Result<Element> {
        self.validate(u)?;
        self.validate(v)?;
        Ok(self.mul(u, v))
    }

    pub fn inv(&self, u: Element) -> Element {
        let m = self.modulus();
        let e = (self.tail_square(u.tail) + u64::from(u.exp) * self.tail_lambda(u.tail)) % m;
        Element {
            exp: ((m - e) % m) as u32,
            tail: u.tail,
        }
    }

    pub fn pow(&self, u: Element, n: i64) -> Element {
        let (mut base, mut k) = if n < 0 {
            (self.inv(u), n.unsigned_abs())
        } else {
            (u, n as u64)
        };
        let mut acc = Element::IDENTITY;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// `u^v = v^-1 u v`.
    pub fn conj(&self, u: Element, v: Element) -> Element {
        self.mul(self.mul(self.inv(v), u), v)
    }

    /// `[u, v] = u^-1 v^-1 u v`.
    pub fn commutator(&self, u: Element, v: Element) -> Element {
        self.mul(
            self.mul(self.inv(u), self.inv(v)),
            self.mul(u, v),
        )
    }

    pub fn commute(&self, u: Element, v: Element) -> bool {
        self.mul(u, v) == self.mul(v, u)
    }

    fn cyclic_order(&self, exp: u32) -> u64 {
        if exp == 0 {
            1
        } else {
            self.modulus() >> exp.trailing_zeros().min(self.ell)
        }
    }

    /// Least `k >= 1` with `u^k = 1`.
    ///
    /// Tails multiply by xor, so `u^2` always lies in `<a>`.
    pub fn element_order(&self, u: Element) -> u64 {
        if u.tail == 0 {
            self.cyclic_order(u.exp)
        } else {
            2 * self.cyclic_order(self.mul(u, u).exp)
        }
    }

    pub fn is_involution(&self, u: Element) -> bool {
        !u.is_identity() && self.mul(u, u).is_identity()
    }

    /// Order of `<gens>` without listing its elements.
    ///
    /// Works with the series `<a> <| G` whose quotient is elementary abelian:
    /// tails of the generators are echelonized over GF(2) and everything
    /// falling into `<a>` (sifted residues, squares and commutators of the
    /// pivots) is folded into a single cyclic subgroup `<a^(2^v)>`.
    pub fn subgroup_order(&self, gens: &[Element]) -> u64 {
        let ell = self.ell;
        let mut v = ell;
        let absorb = |exp: u32, v: &mut u32| {
            let t = if exp == 0 { ell } else { exp.trailing_zeros().min(ell) };
            *v = (*v).min(t);
        };
        let mut pivots: [Option<Element>; TAIL_SLOTS as usize] = [None; TAIL_SLOTS as usize];
        for &g in gens {
            let mut u = g;
            while u.tail != 0 {
                let p = 7 - u.tail.leading_zeros() as usize;
                match pivots[p] {
                    Some(r) => u = self.mul(u, self.inv(r)),
                    None => {
                        pivots[p] = Some(u);
                        break;
                    }
                }
            }
            if u.tail == 0 {
                absorb(u.exp, &mut v);
            }
        }
        let reps: Vec<Element> = pivots.iter().flatten().copied().collect();
        for (i, &r) in reps.iter().enumerate() {
            absorb(self.mul(r, r).exp, &mut v);
            for &s in &reps[i + 1..] {
                absorb(self.commutator(r, s).exp, &mut v);
            }
        }
        (1u64 << (ell - v)) << reps.len()
    }

    pub fn generates(&self, gens: &[Element]) -> bool {
        self.subgroup_order(gens) == self.order()
    }

    // ---- exhaustive scale -------------------------------------------------

    pub fn is_exhaustive(&self) -> bool {
        self.ell <= EXHAUSTIVE_MAX_ELL
    }

    pub(crate) fn require_exhaustive(&self, operation: &'static str) -> Result<()> {
        if self.is_exhaustive() {
            Ok(())
        } else {
            Err(Error::Scale {
                operation,
                limit: format!("ell <= {EXHAUSTIVE_MAX_ELL} (got ell = {})", self.ell),
            })
        }
    }

    /// Dense index of an element; increasing in the element ordering.
    #[inline]
    pub fn index_of(&self, u: Element) -> usize {
        let k = self.tails.len() as u32;
        ((u.exp as usize) << k) | usize::from(u.tail >> (TAIL_SLOTS - k))
    }

    #[inline]
    pub fn element_at(&self, index: usize) -> Element {
        let k = self.tails.len() as u32;
        Element {
            exp: (index >> k) as u32,
            tail: ((index & ((1 << k) - 1)) << (TAIL_SLOTS - k)) as u8,
        }
    }

    /// All elements in increasing order.
    pub fn elements(&self) -> Result<Vec<Element>> {
        self.require_exhaustive("element enumeration")?;
        Ok((0..self.order() as usize).map(|i| self.element_at(i)).collect())
    }

    pub fn involutions(&self) -> Result<Vec<Element>> {
        Ok(self
            .elements()?
            .into_iter()
            .filter(|&u| self.is_involution(u))
            .collect())
    }

    /// Breadth-first product closure of `gens`.
    pub fn closure(&self, gens: &[Element]) -> Result<SubgroupClosure> {
        self.require_exhaustive("subgroup closure")?;
        for &g in gens {
            self.validate(g)?;
        }
        let mut seen = vec![false; self.order() as usize];
        let mut queue = VecDeque::from([Element::IDENTITY]);
        seen[0] = true;
        while let Some(u) = queue.pop_front() {
            for &g in gens {
                let w = self.mul(u, g);
                let i = self.index_of(w);
                if !seen[i] {
                    seen[i] = true;
                    queue.push_back(w);
                }
            }
        }
        let elements: Vec<Element> = seen
            .iter()
            .enumerate()
            .filter(|(_, &s)| s)
            .map(|(i, _)| self.element_at(i))
            .collect();
        Ok(SubgroupClosure {
            order: elements.len() as u64,
            elements,
            generators: gens.to_vec(),
        })
    }

    pub fn center(&self) -> Result<SubgroupClosure> {
        let gens = self.generators();
        let central: Vec<Element> = self
            .elements()?
            .into_iter()
            .filter(|&u| gens.iter().all(|&g| self.commute(u, g)))
            .collect();
        self.closure(&central)
    }

    pub fn commutator_subgroup(&self) -> Result<SubgroupClosure> {
        let elements = self.elements()?;
        let mut seen = vec![false; elements.len()];
        for &u in &elements {
            for &v in &elements {
                seen[self.index_of(self.commutator(u, v))] = true;
            }
        }
        let comms: Vec<Element> = seen
            .iter()
            .enumerate()
            .filter(|(_, &s)| s)
            .map(|(i, _)| self.element_at(i))
            .collect();
        self.closure(&comms)
    }

    /// An index-2 subgroup that is cyclic or dihedral.
    ///
    /// Tries cyclic subgroups first, then `<u, v>` with `|u| = |G|/4` and `v`
    /// an involution outside `<u>` inverting `u`. Both scans run in element
    /// order, so the answer is deterministic.
    pub fn maximal_subgroup_witness(&self) -> Result<SubgroupClosure> {
        let n = self.order();
        let elements = self.elements()?;
        if let Some(&u) = elements.iter().find(|&&u| self.element_order(u) == n / 2) {
            return self.closure(&[u]);
        }
        for &u in elements.iter().filter(|&&u| self.element_order(u) == n / 4) {
            let cyc = self.closure(&[u])?;
            let inverse = self.inv(u);
            for &v in &elements {
                if self.is_involution(v) && !cyc.contains(v) && self.conj(u, v) == inverse {
                    let sub = self.closure(&[u, v])?;
                    if sub.order == n / 2 && sub.is_dihedral(self) {
                        return Ok(sub);
                    }
                }
            }
        }
        Err(Error::InvariantViolation(format!(
            "{} has no cyclic or dihedral maximal subgroup",
            self.descriptor
        )))
    }

    /// Left cosets `uN` of a subgroup, each sorted, ordered by least member.
    pub fn cosets(&self, sub: &SubgroupClosure) -> Result<Vec<Vec<Element>>> {
        let elements = self.elements()?;
        let mut assigned = vec![false; elements.len()];
        let mut out = Vec::new();
        for &u in &elements {
            if assigned[self.index_of(u)] {
                continue;
            }
            let mut coset: Vec<Element> = sub.elements.iter().map(|&h| self.mul(u, h)).collect();
            coset.sort_unstable();
            for &w in &coset {
                assigned[self.index_of(w)] = true;
            }
            out.push(coset);
        }
        Ok(out)
    }

    // ---- words ------------------------------------------------------------

    /// Normal-form word such as `a^3*b*c`; the identity prints as `1`.
    pub fn word(&self, u: Element) -> String {
        let mut parts = Vec::new();
        match u.exp {
            0 => {}
            1 => parts.push("a".to_string()),
            e => parts.push(format!("a^{e}")),
        }
        for (i, t) in self.tails.iter().enumerate() {
            if u.tail_bit(i) {
                parts.push(t.name.to_string());
            }
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }

    /// Parses a product of generator powers, e.g. `a^-1*b` or `c*d^3*a`.
    pub fn parse_word(&self, word: &str) -> Result<Element> {
        let word = word.trim();
        if word == "1" {
            return Ok(Element::IDENTITY);
        }
        let mut acc = Element::IDENTITY;
        for token in word.split('*') {
            let token = token.trim();
            let (name, exp) = match token.split_once('^') {
                Some((n, e)) => (
                    n,
                    e.trim()
                        .parse::<i64>()
                        .map_err(|_| Error::Parse(format!("bad exponent in {token:?}")))?,
                ),
                None => (token, 1),
            };
            let mut chars = name.chars();
            let gen = match (chars.next(), chars.next()) {
                (Some(c), None) => self
                    .generator(c)
                    .ok_or_else(|| Error::Parse(format!("unknown generator {c:?}")))?,
                _ => return Err(Error::Parse(format!("bad token {token:?}"))),
            };
            acc = self.mul(acc, self.pow(gen, exp));
        }
        Ok(acc)
    }
}

impl fmt::Display for GroupInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.descriptor)
    }
}

/// A materialized subgroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupClosure {
    /// Sorted members.
    pub elements: Vec<Element>,
    pub generators: Vec<Element>,
    pub order: u64,
}

impl SubgroupClosure {
    pub fn contains(&self, u: Element) -> bool {
        self.elements.binary_search(&u).is_ok()
    }

    pub fn is_cyclic(&self, g: &GroupInstance) -> bool {
        self.elements.iter().any(|&u| g.element_order(u) == self.order)
    }

    pub fn is_abelian(&self, g: &GroupInstance) -> bool {
        self.generators
            .iter()
            .all(|&u| self.generators.iter().all(|&v| g.commute(u, v)))
    }

    pub fn is_elementary_abelian(&self, g: &GroupInstance) -> bool {
        self.elements.iter().all(|&u| g.mul(u, u).is_identity())
    }

    /// `Z2 x Z2`.
    pub fn is_klein(&self, g: &GroupInstance) -> bool {
        self.order == 4 && self.is_elementary_abelian(g)
    }

    /// Exponents `lambda` with `v^-1 u v = u^lambda`, over cyclic `<u>` of
    /// index 2 and involutions `v` outside it. `lambda` is reduced mod `|u|`.
    fn involutory_actions(&self, g: &GroupInstance) -> Vec<u64> {
        let half = self.order / 2;
        let mut out = Vec::new();
        for &u in self.elements.iter().filter(|&&u| g.element_order(u) == half) {
            let powers: Vec<Element> = (0..half).map(|k| g.pow(u, k as i64)).collect();
            for &v in &self.elements {
                if g.is_involution(v) && !powers.contains(&v) {
                    let c = g.conj(u, v);
                    if let Some(lambda) = powers.iter().position(|&p| p == c) {
                        out.push(lambda as u64);
                    }
                }
            }
        }
        out
    }

    pub fn is_dihedral(&self, g: &GroupInstance) -> bool {
        if self.order < 4 || !self.order.is_power_of_two() {
            return false;
        }
        let half = self.order / 2;
        self.involutory_actions(g)
            .iter()
            .any(|&l| l == (half - 1) % half)
    }

    pub fn is_semidihedral(&self, g: &GroupInstance) -> bool {
        if self.order < 16 {
            return false;
        }
        let target = self.order / 4 - 1;
        self.involutory_actions(g).contains(&target)
    }

    /// `Z_(2^k) : Z2` with `a^b = a^(2^(k-1)+1)`.
    pub fn is_modular(&self, g: &GroupInstance) -> bool {
        if self.order < 16 {
            return false;
        }
        let target = self.order / 4 + 1;
        self.involutory_actions(g).contains(&target)
    }

    /// Generalized quaternion: non-cyclic with a single involution.
    pub fn is_quaternion(&self, g: &GroupInstance) -> bool {
        self.order >= 8
            && !self.is_cyclic(g)
            && self.elements.iter().filter(|&&u| g.is_involution(u)).count() == 1
    }
}
