#![allow(dead_code)]

use trialg::algebra::{block_upper, poly_negation, trunc_poly_triangular, upper_triangular, TriangularAlgebra};
use trialg::exactlin::{vector, Field};
use trialg::maps::{inner_automorphism, LinearEndo};
use trialg::structure::{compose_automorphism, AutParts};

pub fn q() -> Field {
    Field::Rational
}

pub fn f5() -> Field {
    Field::prime(5).unwrap()
}

pub fn identity(t: &TriangularAlgebra) -> LinearEndo {
    LinearEndo::identity(t.field(), t.dim())
}

pub fn diag_sign(t: &TriangularAlgebra, signs: &[i64]) -> LinearEndo {
    let u = t.diag_sign_element(signs).unwrap();
    inner_automorphism(t.algebra(), &u).unwrap()
}

/// Conjugation by `1 + e12`-type element `(1_A, m, 1_B)`.
pub fn shear(t: &TriangularAlgebra, m: &[i64]) -> LinearEndo {
    let f = t.field();
    let u = t.embed(t.unit_a(), &vector::from_i64(f, m), t.unit_b());
    inner_automorphism(t.algebra(), &u).unwrap()
}

/// `x ↦ −x` on both diagonal copies of `K[x]/(x^N)` and on the regular bimodule.
pub fn poly_flip(t: &TriangularAlgebra, n: usize) -> LinearEndo {
    let f = t.field();
    let neg = poly_negation(n, f);
    let parts = AutParts {
        f_sigma: neg.clone(),
        g_sigma: neg.clone(),
        m_sigma: vector::zeros(f, n),
        nu_sigma: neg,
    };
    compose_automorphism(t, &parts).unwrap()
}

pub struct Instance {
    pub name: String,
    pub t: TriangularAlgebra,
    pub sigma: LinearEndo,
}

fn inst(name: &str, t: &TriangularAlgebra, sigma: LinearEndo) -> Instance {
    Instance {
        name: name.to_string(),
        t: t.clone(),
        sigma,
    }
}

/// Instances where A and B carry the trivial-idempotent flag.
pub fn flagged_instances() -> Vec<Instance> {
    let mut out = Vec::new();
    for (fname, field) in [("Q", q()), ("F5", f5())] {
        let t = upper_triangular(2, field).unwrap();
        out.push(inst(&format!("T2({fname}) Id"), &t, identity(&t)));
        out.push(inst(&format!("T2({fname}) diag"), &t, diag_sign(&t, &[1, -1])));
        out.push(inst(&format!("T2({fname}) shear"), &t, shear(&t, &[1])));
    }
    let p = trunc_poly_triangular(3, q()).unwrap();
    out.push(inst("Trian(Q[x]/x^3) Id", &p, identity(&p)));
    out.push(inst("Trian(Q[x]/x^3) diag", &p, diag_sign(&p, &[1, -1])));
    out.push(inst("Trian(Q[x]/x^3) shear", &p, shear(&p, &[1, 1, 0])));
    out.push(inst("Trian(Q[x]/x^3) flip", &p, poly_flip(&p, 3)));
    out
}

/// σ = Id instances without the flag (corollary-level statements).
pub fn identity_instances() -> Vec<Instance> {
    let t3 = upper_triangular(3, q()).unwrap();
    let b21 = block_upper(&[2, 1], 1, q()).unwrap();
    vec![
        inst("T3(Q) Id", &t3, identity(&t3)),
        inst("B(2,1)(Q) Id", &b21, identity(&b21)),
    ]
}
