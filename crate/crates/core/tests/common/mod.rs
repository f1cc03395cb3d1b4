//! A second, deliberately naive implementation of H4 and of the formulas the
//! library evaluates, used as the reference in integration tests. Nothing
//! here calls into the library's evaluator: elements are dense coordinate
//! vectors and every sum is an explicit loop.

#![allow(dead_code, clippy::needless_range_loop)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Basis `1, g, x, gx` as `g^a x^b` with index `a + 2b`.
fn exps(i: usize) -> (usize, usize) {
    (i % 2, i / 2)
}

fn index(a: usize, b: usize) -> usize {
    a % 2 + 2 * b
}

pub fn unit_vec(i: usize, d: usize) -> Vec<Q> {
    let mut v = vec![Q::zero(); d];
    v[i] = Q::one();
    v
}

/// The untwisted Sweedler algebra: `g^a x^b · g^c x^d = (-1)^{bc} g^{a+c} x^{b+d}`.
pub fn sweedler(i: usize, j: usize) -> Vec<Q> {
    let (a, b) = exps(i);
    let (c, d) = exps(j);
    let mut v = vec![Q::zero(); 4];
    if b + d < 2 {
        let sign = if b * c % 2 == 1 { -Q::one() } else { Q::one() };
        v[index(a + c, b + d)] = sign;
    }
    v
}

/// `α(g^a x^b) = c^b g^a x^b`.
pub fn alpha_diag(c: &Q, power: i32) -> Vec<Q> {
    (0..4)
        .map(|i| {
            let (_, b) = exps(i);
            if b == 1 {
                pow(c, power)
            } else {
                Q::one()
            }
        })
        .collect()
}

pub fn pow(c: &Q, k: i32) -> Q {
    let mut r = Q::one();
    for _ in 0..k.unsigned_abs() {
        r *= c.clone();
    }
    if k < 0 {
        Q::one() / r
    } else {
        r
    }
}

/// Dense `d_out × d_in` matrix, `m[r][c]`, column `c` the image of `e_c`.
pub type Mat = Vec<Vec<Q>>;

pub fn zeros(r: usize, c: usize) -> Mat {
    vec![vec![Q::zero(); c]; r]
}

pub fn diag(d: &[Q]) -> Mat {
    let mut m = zeros(d.len(), d.len());
    for (i, v) in d.iter().enumerate() {
        m[i][i] = v.clone();
    }
    m
}

pub fn apply(m: &Mat, v: &[Q]) -> Vec<Q> {
    m.iter()
        .map(|row| row.iter().zip(v).fold(Q::zero(), |acc, (a, b)| acc + a * b))
        .collect()
}

pub fn matmul(a: &Mat, b: &Mat) -> Mat {
    let (n, k, m) = (a.len(), b.len(), b[0].len());
    let mut out = zeros(n, m);
    for i in 0..n {
        for j in 0..m {
            let mut s = Q::zero();
            for t in 0..k {
                s += &a[i][t] * &b[t][j];
            }
            out[i][j] = s;
        }
    }
    out
}

pub fn identity(n: usize) -> Mat {
    diag(&vec![Q::one(); n])
}

/// H4 with twist `diag(1,1,c,c)`, computed from the monomial rules.
#[derive(Clone)]
pub struct OracleH4 {
    pub c: Q,
}

impl OracleH4 {
    pub fn new(c: Q) -> Self {
        Self { c }
    }

    pub fn alpha(&self, v: &[Q]) -> Vec<Q> {
        let d = alpha_diag(&self.c, 1);
        v.iter().zip(&d).map(|(a, b)| a * b).collect()
    }

    pub fn alpha_inv(&self, v: &[Q]) -> Vec<Q> {
        let d = alpha_diag(&self.c, -1);
        v.iter().zip(&d).map(|(a, b)| a * b).collect()
    }

    /// `a ∘ b = α(ab)`.
    pub fn mul(&self, u: &[Q], v: &[Q]) -> Vec<Q> {
        let mut out = vec![Q::zero(); 4];
        for i in 0..4 {
            for j in 0..4 {
                let s = &u[i] * &v[j];
                if s.is_zero() {
                    continue;
                }
                for (k, w) in sweedler(i, j).iter().enumerate() {
                    out[k] += &s * w;
                }
            }
        }
        self.alpha(&out)
    }

    pub fn unit(&self) -> Vec<Q> {
        unit_vec(0, 4)
    }

    /// `Δ = (α⁻¹ ⊗ α⁻¹) Δ₀` with the Sweedler `Δ₀(g) = g⊗g`, `Δ₀(x) = x⊗1 + g⊗x`.
    /// Returned as a 4×4 table `t[a][b]`, the coefficient of `e_a ⊗ e_b`.
    pub fn comul_basis(&self, i: usize) -> Mat {
        let mut t = zeros(4, 4);
        let (a, b) = exps(i);
        if b == 0 {
            t[i][i] = Q::one();
        } else {
            // Δ₀(g^a x) = g^a x ⊗ g^a + g^{a+1} ⊗ g^a x
            let ci = Q::one() / self.c.clone();
            t[index(a, 1)][index(a, 0)] = ci.clone();
            t[index(a + 1, 0)][index(a, 1)] = ci;
        }
        t
    }

    pub fn counit(&self, i: usize) -> Q {
        if exps(i).1 == 0 {
            Q::one()
        } else {
            Q::zero()
        }
    }

    /// `S(g^a x^b)`, `S(x) = -gx`, `S(gx) = x`.
    pub fn antipode_basis(&self, i: usize) -> Vec<Q> {
        let mut v = vec![Q::zero(); 4];
        match i {
            2 => v[3] = -Q::one(),
            3 => v[2] = Q::one(),
            _ => v[i] = Q::one(),
        }
        v
    }

    /// `S⁻¹(x) = gx`, `S⁻¹(gx) = -x`.
    pub fn antipode_inv_basis(&self, i: usize) -> Vec<Q> {
        let mut v = vec![Q::zero(); 4];
        match i {
            2 => v[3] = Q::one(),
            3 => v[2] = -Q::one(),
            _ => v[i] = Q::one(),
        }
        v
    }

    pub fn linear(&self, f: impl Fn(usize) -> Vec<Q>, v: &[Q]) -> Vec<Q> {
        let mut out = vec![Q::zero(); 4];
        for (i, s) in v.iter().enumerate() {
            if s.is_zero() {
                continue;
            }
            for (k, w) in f(i).iter().enumerate() {
                out[k] += s * w;
            }
        }
        out
    }

    pub fn mul_matrix(&self) -> Mat {
        let mut m = zeros(4, 16);
        for i in 0..4 {
            for j in 0..4 {
                let p = self.mul(&unit_vec(i, 4), &unit_vec(j, 4));
                for k in 0..4 {
                    m[k][i * 4 + j] = p[k].clone();
                }
            }
        }
        m
    }

    pub fn comul_matrix(&self) -> Mat {
        let mut m = zeros(16, 4);
        for i in 0..4 {
            let t = self.comul_basis(i);
            for a in 0..4 {
                for b in 0..4 {
                    m[a * 4 + b][i] = t[a][b].clone();
                }
            }
        }
        m
    }
}

/// `diag(1, 1, λ, λ)` as a map of coordinate vectors.
pub fn aut(lambda: &Q, v: &[Q]) -> Vec<Q> {
    let d = alpha_diag(lambda, 1);
    v.iter().zip(&d).map(|(a, b)| a * b).collect()
}

pub fn aut_inv(lambda: &Q, v: &[Q]) -> Vec<Q> {
    let d = alpha_diag(lambda, -1);
    v.iter().zip(&d).map(|(a, b)| a * b).collect()
}

/// `h·m = (B(h₂)α⁻¹(m)) A(S⁻¹(α(h₁)))` on the carrier `H`, with `A`, `B`
/// the automorphisms for `lambda_a`, `lambda_b`.
pub fn canonical_action(h: &OracleH4, lambda_a: &Q, lambda_b: &Q, hi: usize, mi: usize) -> Vec<Q> {
    let t = h.comul_basis(hi);
    let mut out = vec![Q::zero(); 4];
    let m = h.alpha_inv(&unit_vec(mi, 4));
    for a in 0..4 {
        for b in 0..4 {
            let s = &t[a][b];
            if s.is_zero() {
                continue;
            }
            let h1 = h.alpha(&unit_vec(a, 4));
            let h1 = aut(lambda_a, &h.linear(|i| h.antipode_inv_basis(i), &h1));
            let h2 = aut(lambda_b, &unit_vec(b, 4));
            let v = h.mul(&h.mul(&h2, &m), &h1);
            for k in 0..4 {
                out[k] += s * &v[k];
            }
        }
    }
    out
}

/// An action given by its values on basis pairs, as a `4 × 16` matrix.
pub fn action_matrix(f: impl Fn(usize, usize) -> Vec<Q>) -> Mat {
    let mut m = zeros(4, 16);
    for hi in 0..4 {
        for mi in 0..4 {
            let v = f(hi, mi);
            for k in 0..4 {
                m[k][hi * 4 + mi] = v[k].clone();
            }
        }
    }
    m
}

pub fn act(action: &Mat, h: &[Q], m: &[Q]) -> Vec<Q> {
    let mut out = vec![Q::zero(); action.len()];
    let dm = m.len();
    for (i, hs) in h.iter().enumerate() {
        for (j, ms) in m.iter().enumerate() {
            let s = hs * ms;
            if s.is_zero() {
                continue;
            }
            for k in 0..out.len() {
                out[k] += &s * &action[k][i * dm + j];
            }
        }
    }
    out
}

/// The braiding `c(m ⊗ n) = α(n₀) ⊗ B⁻¹(n₁)·α⁻¹(m)` of two modules with
/// carrier `H`, coaction `Δ` and twist `α`, as a `16 × 16` matrix in the
/// column convention. `lambda_b` is the `B` of the first module's pair.
pub fn braiding(h: &OracleH4, m_action: &Mat, lambda_b: &Q) -> Mat {
    let mut out = zeros(16, 16);
    for mi in 0..4 {
        for ni in 0..4 {
            let t = h.comul_basis(ni);
            let m = h.alpha_inv(&unit_vec(mi, 4));
            for a in 0..4 {
                for b in 0..4 {
                    let s = &t[a][b];
                    if s.is_zero() {
                        continue;
                    }
                    let left = h.alpha(&unit_vec(a, 4));
                    let right = act(m_action, &aut_inv(lambda_b, &unit_vec(b, 4)), &m);
                    for x in 0..4 {
                        for y in 0..4 {
                            out[x * 4 + y][mi * 4 + ni] += s * &left[x] * &right[y];
                        }
                    }
                }
            }
        }
    }
    out
}

/// The untwisted braiding `m ⊗ n ↦ n₀ ⊗ n₁·m` for the Sweedler algebra with
/// the action `h·m = h₂ m S⁻¹(h₁)`.
pub fn classical_braiding() -> Mat {
    let h = OracleH4::new(q(1));
    let action = action_matrix(|hi, mi| {
        let t = h.comul_basis(hi);
        let mut out = vec![Q::zero(); 4];
        for a in 0..4 {
            for b in 0..4 {
                if t[a][b].is_zero() {
                    continue;
                }
                let si = h.antipode_inv_basis(a);
                let prod = h.linear(|k| h.linear(|l| sweedler(k, l), &si), &sweedler(b, mi));
                for k in 0..4 {
                    out[k] += &t[a][b] * &prod[k];
                }
            }
        }
        out
    });
    let mut out = zeros(16, 16);
    for mi in 0..4 {
        for ni in 0..4 {
            let t = h.comul_basis(ni);
            for a in 0..4 {
                for b in 0..4 {
                    if t[a][b].is_zero() {
                        continue;
                    }
                    let right = act(&action, &unit_vec(b, 4), &unit_vec(mi, 4));
                    for y in 0..4 {
                        out[a * 4 + y][mi * 4 + ni] += &t[a][b] * &right[y];
                    }
                }
            }
        }
    }
    out
}

/// The four parameterised cells of the printed matrix, 1-based (row, col)
/// in the layout where row `i` is the image of `e_i`, as functions of `c'`.
pub fn parameter_cells(cp: &Q) -> [((usize, usize), Q); 4] {
    let one = Q::one();
    [
        ((3, 8), cp - &one),
        ((8, 3), -(cp + &one)),
        ((4, 4), &one - cp),
        ((7, 7), cp + &one),
    ]
}

/// The printed 16×16 matrix with `m`, `n` left symbolic; `None` marks a
/// parameter cell.
pub fn printed_d() -> Vec<Vec<Option<i64>>> {
    const ROWS: [&str; 16] = [
        "1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0",
        "0 0 0 0 1 0 0 0 0 0 0 0 0 0 0 0",
        "0 0 0 0 0 0 0 m 1 0 0 0 0 0 0 0",
        "0 0 0 n 0 0 0 0 0 0 0 0 1 0 0 0",
        "0 1 0 0 0 0 0 0 0 0 0 0 0 0 0 0",
        "0 0 0 0 0 1 0 0 0 0 0 0 0 0 0 0",
        "0 0 0 0 0 0 n 0 0 1 0 0 0 0 0 0",
        "0 0 m 0 0 0 0 0 0 0 0 0 0 1 0 0",
        "0 0 1 0 0 0 0 0 0 0 0 0 0 0 0 0",
        "0 0 0 0 0 0 -1 0 0 0 0 0 0 0 0 0",
        "0 0 0 0 0 0 0 0 0 0 1 0 0 0 0 0",
        "0 0 0 0 0 0 0 0 0 0 0 0 0 0 -1 0",
        "0 0 0 1 0 0 0 0 0 0 0 0 0 0 0 0",
        "0 0 0 0 0 0 0 -1 0 0 0 0 0 0 0 0",
        "0 0 0 0 0 0 0 0 0 0 0 1 0 0 0 0",
        "0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 -1",
    ];
    ROWS.iter()
        .map(|r| r.split_whitespace().map(|t| t.parse().ok()).collect())
        .collect()
}

/// `(ab)`-style checks on dense data: returns the first `(h, k, m)` where
/// `α(h)·(k·m) ≠ (hk)·μ(m)` for a module with carrier `H`, `μ = α`.
pub fn module_associativity_failure(h: &OracleH4, action: &Mat) -> Option<(usize, usize, usize)> {
    for hi in 0..4 {
        for ki in 0..4 {
            for mi in 0..4 {
                let (he, ke, me) = (unit_vec(hi, 4), unit_vec(ki, 4), unit_vec(mi, 4));
                let lhs = act(action, &h.alpha(&he), &act(action, &ke, &me));
                let rhs = act(action, &h.mul(&he, &ke), &h.alpha(&me));
                if lhs != rhs {
                    return Some((hi, ki, mi));
                }
            }
        }
    }
    None
}

/// The compatibility `ρ(h·m) = α(h₂₁)·m₀ ⊗ (B(h₂₂)α⁻¹(m₁))A(S⁻¹(h₁))` for a
/// module with carrier `H`, coaction `Δ`, checked on all basis pairs.
pub fn yd_failure(h: &OracleH4, action: &Mat, lambda_a: &Q, lambda_b: &Q) -> Option<(usize, usize)> {
    for hi in 0..4 {
        for mi in 0..4 {
            let hm = act(action, &unit_vec(hi, 4), &unit_vec(mi, 4));
            let mut lhs = zeros(4, 4);
            for (k, s) in hm.iter().enumerate() {
                let t = h.comul_basis(k);
                for a in 0..4 {
                    for b in 0..4 {
                        lhs[a][b] += s * &t[a][b];
                    }
                }
            }
            let mut rhs = zeros(4, 4);
            let th = h.comul_basis(hi);
            let tm = h.comul_basis(mi);
            for h1 in 0..4 {
                for h2 in 0..4 {
                    let s = &th[h1][h2];
                    if s.is_zero() {
                        continue;
                    }
                    let t2 = h.comul_basis(h2);
                    let right = aut(lambda_a, &h.antipode_inv_basis(h1));
                    for h21 in 0..4 {
                        for h22 in 0..4 {
                            let s2 = s * &t2[h21][h22];
                            if s2.is_zero() {
                                continue;
                            }
                            for m0 in 0..4 {
                                for m1 in 0..4 {
                                    let s3 = &s2 * &tm[m0][m1];
                                    if s3.is_zero() {
                                        continue;
                                    }
                                    let left = act(action, &h.alpha(&unit_vec(h21, 4)), &unit_vec(m0, 4));
                                    let mid = h.mul(&aut(lambda_b, &unit_vec(h22, 4)), &h.alpha_inv(&unit_vec(m1, 4)));
                                    let coact = h.mul(&mid, &right);
                                    for x in 0..4 {
                                        for y in 0..4 {
                                            rhs[x][y] += &s3 * &left[x] * &coact[y];
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
            if lhs != rhs {
                return Some((hi, mi));
            }
        }
    }
    None
}

/// A small deterministic grid of nonzero rationals.
pub fn grid4() -> [Q; 4] {
    [q(1), q(2), frac(-1, 2), frac(3, 5)]
}

// Fuzz inputs for the definition parser.

pub const H4_FILE: &str = include_str!("../../data/h4.alg");

pub const SMALL_FILE: &str = "[params]
t = 2

[algebra Z2]
basis: e s
unit: -> e
mul: e e -> e
mul: e s -> s
mul: s e -> s
mul: s s -> e

[coalgebra C]
basis: e s
comul: e -> e e
comul: s -> s s
counit: e -> 1
counit: s -> t/t
";

const ALPHABET: &[char] = &[
    '[', ']', ':', '-', '>', '*', '/', '+', '(', ')', '@', '#', '=', '\n', '\n', ' ', ' ', ' ', 'a', 'c', 'g', 'x',
    'e', 's', '0', '1', '2', '9', '_', '\'', '.', 'é', '\t',
];

fn random_text(rng: &mut ChaCha8Rng) -> String {
    let n = rng.gen_range(0..120);
    (0..n).map(|_| ALPHABET[rng.gen_range(0..ALPHABET.len())]).collect()
}

fn mutate(rng: &mut ChaCha8Rng, base: &str) -> String {
    let mut chars: Vec<char> = base.chars().collect();
    for _ in 0..rng.gen_range(1..6) {
        let at = rng.gen_range(0..=chars.len());
        match rng.gen_range(0..4) {
            0 if at < chars.len() => {
                chars.remove(at);
            }
            1 => chars.insert(at, ALPHABET[rng.gen_range(0..ALPHABET.len())]),
            2 if at < chars.len() => chars[at] = ALPHABET[rng.gen_range(0..ALPHABET.len())],
            _ => {
                let end = (at + rng.gen_range(0..40)).min(chars.len());
                let piece: Vec<char> = chars[at..end].to_vec();
                let to = rng.gen_range(0..=chars.len());
                chars.splice(to..to, piece);
            }
        }
    }
    chars.into_iter().collect()
}

/// `count` inputs: random token soup, and mutations of a small file and of
/// the shipped H4 file.
pub fn fuzz_inputs(seed: u64, count: usize) -> impl Iterator<Item = String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(move |i| match i % 10 {
        0..=3 => random_text(&mut rng),
        4..=8 => mutate(&mut rng, SMALL_FILE),
        _ => mutate(&mut rng, H4_FILE),
    })
}
