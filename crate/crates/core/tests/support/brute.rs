//! Fingerprints by exhaustive enumeration. Every ideal is built as an
//! explicit set of elements; dimensions are read off as `log_q |set|`.
//! Nothing here calls the library's linear algebra or invariant code.

use std::collections::HashSet;

use symkuls::algebra::{Algebra, Element};
use symkuls::fingerprint::Fingerprint;
use symkuls::form::SymForm;
use symkuls::gfield::{FieldSpec, Scalar};

type Set = HashSet<Element>;

pub struct Brute<'a> {
    a: &'a Algebra,
    f: &'a FieldSpec,
    lambda: Vec<Scalar>,
    elements: Vec<Element>,
    basis: Vec<Element>,
}

impl<'a> Brute<'a> {
    pub fn new(a: &'a Algebra, form: &SymForm) -> Self {
        let f = a.field();
        let d = a.dim();
        let q = f.q() as usize;
        let total = q.checked_pow(d as u32).expect("small algebra");
        let elements = (0..total)
            .map(|mut code| {
                (0..d)
                    .map(|_| {
                        let c = Scalar((code % q) as u32);
                        code /= q;
                        c
                    })
                    .collect()
            })
            .collect();
        let basis = (0..d).map(|i| (0..d).map(|j| if i == j { Scalar::ONE } else { Scalar::ZERO }).collect()).collect();
        Brute { a, f, lambda: form.lambda().to_vec(), elements, basis }
    }

    fn zero(&self) -> Element {
        vec![Scalar::ZERO; self.a.dim()]
    }

    fn add(&self, x: &[Scalar], y: &[Scalar]) -> Element {
        x.iter().zip(y).map(|(&a, &b)| self.f.add(a, b)).collect()
    }

    fn scale(&self, c: Scalar, x: &[Scalar]) -> Element {
        x.iter().map(|&a| self.f.mul(c, a)).collect()
    }

    fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Element {
        self.a.multiply(x, y)
    }

    fn lambda(&self, x: &[Scalar]) -> Scalar {
        x.iter().zip(&self.lambda).fold(Scalar::ZERO, |acc, (&a, &b)| self.f.add(acc, self.f.mul(a, b)))
    }

    fn pair(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        self.lambda(&self.mul(x, y))
    }

    fn dim_of(&self, s: &Set) -> usize {
        let q = self.f.q() as usize;
        let (mut d, mut n) = (0, 1usize);
        while n < s.len() {
            n *= q;
            d += 1;
        }
        assert_eq!(n, s.len(), "set size {} is not a power of q", s.len());
        d
    }

    /// All `F`-linear combinations of `gens`.
    fn span<I: IntoIterator<Item = Element>>(&self, gens: I) -> Set {
        let mut set: Set = [self.zero()].into_iter().collect();
        for g in gens {
            if set.contains(&g) {
                continue;
            }
            let mut next = Set::with_capacity(set.len() * self.f.q() as usize);
            for s in &set {
                for c in self.f.elements() {
                    next.insert(self.add(s, &self.scale(c, &g)));
                }
            }
            set = next;
        }
        set
    }

    fn frobenius_power(&self, x: &[Scalar], n: u32) -> Element {
        let mut y = x.to_vec();
        for _ in 0..n {
            let base = y.clone();
            for _ in 1..self.f.p() {
                y = self.mul(&y, &base);
            }
        }
        y
    }

    fn is_central(&self, x: &[Scalar]) -> bool {
        self.basis.iter().all(|b| self.mul(x, b) == self.mul(b, x))
    }

    pub fn centre(&self) -> Set {
        self.elements.iter().filter(|x| self.is_central(x)).cloned().collect()
    }

    pub fn commutators(&self) -> Set {
        let mut gens = Vec::new();
        for x in &self.basis {
            for y in &self.basis {
                let xy = self.mul(x, y);
                let yx = self.mul(y, x);
                gens.push(self.add(&xy, &self.scale(self.f.neg(Scalar::ONE), &yx)));
            }
        }
        self.span(gens)
    }

    pub fn t_space(&self, k: &Set, n: u32) -> Set {
        self.elements.iter().filter(|x| k.contains(&self.frobenius_power(x, n))).cloned().collect()
    }

    pub fn perp(&self, s: &Set) -> Set {
        self.elements.iter().filter(|y| s.iter().all(|x| self.pair(y, x).is_zero())).cloned().collect()
    }

    fn product(&self, u: &Set, v: &Set) -> Set {
        let mut gens = Vec::new();
        for x in u {
            for y in v {
                gens.push(self.mul(x, y));
            }
        }
        self.span(gens)
    }

    fn dual_basis(&self) -> Vec<Element> {
        (0..self.basis.len())
            .map(|i| {
                self.elements
                    .iter()
                    .find(|b| {
                        self.basis.iter().enumerate().all(|(j, e)| {
                            let want = if i == j { Scalar::ONE } else { Scalar::ZERO };
                            self.pair(e, b) == want
                        })
                    })
                    .expect("non-degenerate form has a dual basis")
                    .clone()
            })
            .collect()
    }

    pub fn higman(&self) -> Set {
        let duals = self.dual_basis();
        let images = self.basis.iter().map(|y| {
            let mut acc = self.zero();
            for (e, b) in self.basis.iter().zip(&duals) {
                acc = self.add(&acc, &self.mul(&self.mul(e, y), b));
            }
            acc
        });
        self.span(images.collect::<Vec<_>>())
    }

    fn is_nilpotent(&self, x: &[Scalar]) -> bool {
        let mut y = x.to_vec();
        for _ in 0..self.a.dim() {
            if y.iter().all(|c| c.is_zero()) {
                return true;
            }
            y = self.mul(&y, x);
        }
        y.iter().all(|c| c.is_zero())
    }

    /// `{x : a·x is nilpotent for every a}`.
    pub fn radical(&self) -> Set {
        self.elements
            .iter()
            .filter(|x| self.elements.iter().all(|a| self.is_nilpotent(&self.mul(a, x))))
            .cloned()
            .collect()
    }

    /// Primitive central idempotents, each with a flag for a simple block.
    pub fn blocks(&self, centre: &Set) -> Vec<(Element, bool)> {
        let zero = self.zero();
        let idempotents: Vec<&Element> = centre.iter().filter(|e| **e != zero && self.mul(e, e) == **e).collect();
        let primitive: Vec<&Element> = idempotents
            .iter()
            .filter(|e| idempotents.iter().all(|g| g == *e || self.mul(e, g) != **g))
            .copied()
            .collect();
        let radical = self.radical();
        let mut out: Vec<(Element, bool)> =
            primitive.into_iter().map(|e| (e.clone(), radical.iter().all(|x| self.mul(e, x) == zero))).collect();
        out.sort();
        out
    }

    pub fn fingerprint(&self) -> Fingerprint {
        let centre = self.centre();
        let k = self.commutators();
        let mut t_spaces = vec![self.t_space(&k, 1)];
        loop {
            let next = self.t_space(&k, t_spaces.len() as u32 + 1);
            if &next == t_spaces.last().unwrap() {
                break;
            }
            t_spaces.push(next);
        }
        let n_stab = t_spaces.len();
        let perps: Vec<Set> = t_spaces.iter().map(|t| self.perp(t)).collect();
        let depth = n_stab.min(3);
        let mut product_dims = Vec::new();
        for i in 1..=depth {
            for j in i..=depth {
                product_dims.push((i, j, self.dim_of(&self.product(&perps[i - 1], &perps[j - 1]))));
            }
        }
        let mut powers = vec![perps[0].clone()];
        for _ in 1..3 {
            let next = self.product(powers.last().unwrap(), &perps[0]);
            powers.push(next);
        }
        let z0 = {
            let mut gens = Vec::new();
            for (e, simple) in self.blocks(&centre) {
                if simple {
                    gens.extend(centre.iter().map(|z| self.mul(&e, z)));
                }
            }
            self.span(gens)
        };
        Fingerprint {
            p: self.f.p(),
            k: self.f.k(),
            dim_a: self.a.dim(),
            dim_za: self.dim_of(&centre),
            dim_ka: self.dim_of(&k),
            n_stab,
            perp_dims: perps.iter().map(|s| self.dim_of(s)).collect(),
            dim_ha: self.dim_of(&self.higman()),
            dim_reynolds: self.dim_of(perps.last().unwrap()),
            dim_z0: self.dim_of(&z0),
            product_dims,
            power_dims: powers.iter().map(|s| self.dim_of(s)).collect(),
        }
    }
}
