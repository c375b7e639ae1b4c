//! The 8-dimensional Kac-Paljutkin algebra `H8`.
//!
//! Presentation: generators `x, y, z` with `x^2 = y^2 = 1`, `xy = yx`, `zx = yz`, `zy = xz`,
//! `z^2 = (1 + x + y - xy)/2`; `x, y` grouplike, `eps(z) = 1`, `S(z) = z` and
//! `Delta(z) = (1/2)(1(x)1 + 1(x)x + y(x)1 - y(x)x)(z (x) z)`.
//! Basis `x^a y^b z^c` with index `a + 2b + 4c`, i.e. `1, x, y, xy, z, xz, yz, xyz`.

use num_bigint::BigInt;

use crate::corpus::format::parse_algebra;
use crate::error::Result;
use crate::exactmath::{field_make, Matrix, Rational};
use crate::hopf::HopfAlgebraData;

/// Frozen structure constants, generated from the presentation and checked against it in tests.
const FROZEN: &str = include_str!("../../data/kac_paljutkin.json");

pub const CYCLOTOMIC_ORDER: u32 = 8;

/// `H8` over `Q(zeta_8)`, from the embedded constants.
pub fn kac_paljutkin() -> HopfAlgebraData {
    parse_algebra(FROZEN).expect("embedded Kac-Paljutkin constants parse")
}

type Word = (usize, usize, usize);
type Sparse = Vec<(usize, Rational)>;

fn index((a, b, c): Word) -> usize {
    a + 2 * b + 4 * c
}

fn word(i: usize) -> Word {
    (i & 1, (i >> 1) & 1, (i >> 2) & 1)
}

fn half() -> Rational {
    Rational::new(BigInt::from(1), BigInt::from(2))
}

fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Product of two basis words by rewriting with the defining relations.
fn word_product(u: Word, v: Word) -> Sparse {
    let (a, b, c) = u;
    let (a2, b2, c2) = v;
    // moving z past x^a2 y^b2 swaps the exponents
    let (p, q) = if c == 1 { (a ^ b2, b ^ a2) } else { (a ^ a2, b ^ b2) };
    match c + c2 {
        2 => {
            // x^p y^q z^2 = (1/2)(x^p y^q)(1 + x + y - xy)
            let terms = [((0, 0), half()), ((1, 0), half()), ((0, 1), half()), ((1, 1), -half())];
            terms
                .into_iter()
                .map(|((dx, dy), coef)| (index((p ^ dx, q ^ dy, 0)), coef))
                .collect()
        }
        cz => vec![(index((p, q, cz)), rat(1))],
    }
}

fn multiply(x: &Sparse, y: &Sparse) -> Sparse {
    let mut acc = vec![rat(0); 8];
    for (i, s) in x {
        for (j, t) in y {
            for (k, m) in word_product(word(*i), word(*j)) {
                acc[k] += s * t * m;
            }
        }
    }
    acc.into_iter()
        .enumerate()
        .filter(|(_, c)| *c != rat(0))
        .collect()
}

type Tensor = Vec<((usize, usize), Rational)>;

fn tensor_multiply(x: &Tensor, y: &Tensor) -> Tensor {
    let mut acc = vec![rat(0); 64];
    for ((i1, i2), s) in x {
        for ((j1, j2), t) in y {
            for (k1, m1) in word_product(word(*i1), word(*j1)) {
                for (k2, m2) in word_product(word(*i2), word(*j2)) {
                    acc[k1 * 8 + k2] += s * t * &m1 * m2;
                }
            }
        }
    }
    acc.into_iter()
        .enumerate()
        .filter(|(_, c)| *c != rat(0))
        .map(|(ix, c)| ((ix / 8, ix % 8), c))
        .collect()
}

/// Builds `H8` directly from the presentation.
pub fn kac_paljutkin_from_presentation() -> Result<HopfAlgebraData> {
    let f = field_make(CYCLOTOMIC_ORDER)?;
    let n = 8;
    let one_t: Tensor = vec![((0, 0), rat(1))];
    let x = index((1, 0, 0));
    let y = index((0, 1, 0));
    let z = index((0, 0, 1));
    let delta_x: Tensor = vec![((x, x), rat(1))];
    let delta_y: Tensor = vec![((y, y), rat(1))];
    let twist: Tensor = vec![
        ((0, 0), half()),
        ((0, x), half()),
        ((y, 0), half()),
        ((y, x), -half()),
    ];
    let delta_z = tensor_multiply(&twist, &vec![((z, z), rat(1))]);

    let mut mult = vec![f.zero(); n * n * n];
    let mut comult = vec![f.zero(); n * n * n];
    let mut antipode = Matrix::zeros(f, n, n);
    for i in 0..n {
        let (a, b, c) = word(i);
        for j in 0..n {
            for (k, coef) in word_product(word(i), word(j)) {
                mult[(i * n + j) * n + k] = f.from_rational(coef);
            }
        }
        let mut d = one_t.clone();
        if a == 1 {
            d = tensor_multiply(&d, &delta_x);
        }
        if b == 1 {
            d = tensor_multiply(&d, &delta_y);
        }
        if c == 1 {
            d = tensor_multiply(&d, &delta_z);
        }
        for ((j, k), coef) in d {
            comult[(i * n + j) * n + k] = f.from_rational(coef);
        }
        // S(x^a y^b z^c) = z^c y^b x^a
        let mut s: Sparse = vec![(0, rat(1))];
        for (gen, present) in [(z, c), (y, b), (x, a)] {
            if present == 1 {
                s = multiply(&s, &vec![(gen, rat(1))]);
            }
        }
        for (k, coef) in s {
            antipode[(i, k)] = f.from_rational(coef);
        }
    }
    let mut unit = vec![f.zero(); n];
    unit[0] = f.one();
    HopfAlgebraData::new("H8", f, n, mult, unit, comult, vec![f.one(); n], antipode)
}
