//! `Pic(X) = ℤH ⊕ ℤE` and the involution exchanging the two blowdowns.

use std::fmt;

/// The class `a·H + b·E`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DivisorClass {
    pub a: i64,
    pub b: i64,
}

impl DivisorClass {
    pub const H: DivisorClass = DivisorClass { a: 1, b: 0 };
    pub const E: DivisorClass = DivisorClass { a: 0, b: 1 };

    pub fn new(a: i64, b: i64) -> Self {
        DivisorClass { a, b }
    }

    /// `H' = 3H − E`, the pullback of a plane under the second projection.
    pub fn h_prime() -> Self {
        picard_involution(Self::H)
    }

    /// `K_X = −4H + E`.
    pub fn canonical() -> Self {
        DivisorClass { a: -4, b: 1 }
    }

    pub fn anticanonical() -> Self {
        -Self::canonical()
    }
}

impl std::ops::Add for DivisorClass {
    type Output = DivisorClass;
    fn add(self, o: DivisorClass) -> DivisorClass {
        DivisorClass::new(self.a + o.a, self.b + o.b)
    }
}

impl std::ops::Sub for DivisorClass {
    type Output = DivisorClass;
    fn sub(self, o: DivisorClass) -> DivisorClass {
        DivisorClass::new(self.a - o.a, self.b - o.b)
    }
}

impl std::ops::Neg for DivisorClass {
    type Output = DivisorClass;
    fn neg(self) -> DivisorClass {
        DivisorClass::new(-self.a, -self.b)
    }
}

impl std::ops::Mul<DivisorClass> for i64 {
    type Output = DivisorClass;
    fn mul(self, c: DivisorClass) -> DivisorClass {
        DivisorClass::new(self * c.a, self * c.b)
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (0, 0) => f.write_str("0"),
            (a, 0) => write!(f, "{a}H"),
            (0, b) => write!(f, "{b}E"),
            (a, b) if b < 0 => write!(f, "{a}H - {}E", -b),
            (a, b) => write!(f, "{a}H + {b}E"),
        }
    }
}

/// `ι(H) = 3H − E`, `ι(E) = 8H − 3E`.
pub fn picard_involution(c: DivisorClass) -> DivisorClass {
    c.a * DivisorClass::new(3, -1) + c.b * DivisorClass::new(8, -3)
}

/// Generators of the sublattice fixed by the group: `ℤ(4H − E)` if it
/// contains a swap, all of `Pic(X)` otherwise.
pub fn invariant_sublattice(swap: bool) -> Vec<DivisorClass> {
    if !swap {
        return vec![DivisorClass::H, DivisorClass::E];
    }
    // kernel of ι − id = [[2, 8], [-1, -4]] over ℤ
    let (p, q) = (picard_involution(DivisorClass::H) - DivisorClass::H, picard_involution(DivisorClass::E) - DivisorClass::E);
    // a·p + b·q = 0; the primitive solution is (q.a, -p.a) / gcd
    let (a, b) = (q.a, -p.a);
    let g = num_integer::gcd(a, b);
    let mut v = DivisorClass::new(a / g, b / g);
    if v.a < 0 || (v.a == 0 && v.b < 0) {
        v = -v;
    }
    debug_assert_eq!(picard_involution(v), v);
    vec![v]
}
