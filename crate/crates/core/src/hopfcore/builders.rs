//! The concrete algebras: the 12-dimensional Hopf algebra C (generators a, b),
//! the Radford algebra A1 (generators g, x), the group algebra of Z6 as a
//! cosemisimple fixture, and the presentation of the Drinfeld double D.

use super::presented::{GeneratorData, PresentedHopf};
use super::{cv_unit, FDHopf};
use crate::exactmath::{CycQ6, Theta};
use crate::freealg::{parse_poly, Alphabet, NCPoly, Presentation};

fn poly(alph: &Alphabet, s: &str) -> NCPoly {
    parse_poly(s, alph).expect("builder polynomial parses")
}

/// Presentation of C: a^6 = 1, b^2 = 0, ba = xi ab, basis {b^d a^j}.
pub fn c_presentation() -> Presentation {
    let alphabet = Alphabet::new(&["b", "a"]);
    let xi = CycQ6::xi();
    let mut comm = poly(&alphabet, "b a");
    comm.add_term(crate::freealg::word(&alphabet, &["a", "b"]), &-xi);
    let relations = vec![
        poly(&alphabet, "a^6 - 1"),
        poly(&alphabet, "b^2"),
        comm,
    ];
    Presentation {
        alphabet,
        relations,
    }
}

fn c_generator_data() -> GeneratorData {
    let alph = c_presentation().alphabet;
    let p = |s: &str| poly(&alph, s);
    GeneratorData {
        comult: vec![
            (
                "a".into(),
                vec![
                    (p("a"), p("a"), CycQ6::one()),
                    (p("b"), p("b a^3"), CycQ6::xi_pow(4) + CycQ6::xi_pow(5)),
                ],
            ),
            (
                "b".into(),
                vec![
                    (p("b"), p("a^4"), CycQ6::one()),
                    (p("a"), p("b"), CycQ6::one()),
                ],
            ),
        ],
        counit: vec![("a".into(), CycQ6::one()), ("b".into(), CycQ6::zero())],
        antipode: Some(vec![
            ("a".into(), p("a^5")),
            ("b".into(), p("b a").scale(&CycQ6::xi_pow(-2))),
        ]),
        expand: vec![],
    }
}

/// The Hopf algebra C of Definition `a^6=1, b^2=0, ba=xi ab` with
/// Delta(a) = a(x)a + (xi^4+xi^5) b(x)ba^3 and Delta(b) = b(x)a^4 + a(x)b.
pub fn build_c() -> PresentedHopf {
    PresentedHopf::build(&c_presentation(), 12, &c_generator_data()).expect("C builds")
}

/// Presentation of A1: g^6 = 1, x^2 = 1 - g^2, gx = -xg, basis {g^i x^d}.
pub fn a1_presentation() -> Presentation {
    let alphabet = Alphabet::new(&["g", "x"]);
    let relations = vec![
        poly(&alphabet, "g^6 - 1"),
        poly(&alphabet, "x^2 - 1 + g^2"),
        poly(&alphabet, "x g + g x"),
    ];
    Presentation {
        alphabet,
        relations,
    }
}

/// The Radford algebra A1 with Delta(g) = g(x)g, Delta(x) = x(x)1 + g(x)x.
pub fn build_a1() -> PresentedHopf {
    let pres = a1_presentation();
    let alph = pres.alphabet.clone();
    let p = |s: &str| poly(&alph, s);
    let gen = GeneratorData {
        comult: vec![
            ("g".into(), vec![(p("g"), p("g"), CycQ6::one())]),
            (
                "x".into(),
                vec![
                    (p("x"), NCPoly::one(), CycQ6::one()),
                    (p("g"), p("x"), CycQ6::one()),
                ],
            ),
        ],
        counit: vec![("g".into(), CycQ6::one()), ("x".into(), CycQ6::zero())],
        antipode: Some(vec![
            ("g".into(), p("g^5")),
            ("x".into(), p("g^5 x").neg()),
        ]),
        expand: vec![],
    };
    PresentedHopf::build(&pres, 12, &gen).expect("A1 builds")
}

/// Presentation of the Drinfeld double D on generators g, x, b, a:
/// the relations of C and A1 plus the four cross relations. The letter x is
/// weighted so the inhomogeneous cross relations point at `ax` and `bx`.
pub fn double_presentation(theta: Theta) -> Presentation {
    let alphabet = Alphabet::with_weights(&["g", "x", "b", "a"], &[1, 4, 1, 1]);
    let th = theta.value();
    let xi = CycQ6::xi();
    let ximinus2 = CycQ6::xi_pow(-2);
    let lam_inv = CycQ6::lambda().inv().unwrap();
    let p = |s: &str| poly(&alphabet, s);
    let w = |s: &[&str]| crate::freealg::word(&alphabet, s);

    let mut comm_ba = p("b a");
    comm_ba.add_term(w(&["a", "b"]), &-xi.clone());

    // ax + xi^-2 xa - Lam^-1 theta xi^-2 (ba^3 - gb) = 0
    let mut cross_a = p("a x");
    cross_a.add_term(w(&["x", "a"]), &ximinus2);
    let c1 = &lam_inv * &(&th * &ximinus2);
    cross_a.add_term(w(&["b", "a", "a", "a"]), &-c1.clone());
    cross_a.add_term(w(&["g", "b"]), &c1);

    // bx + xi^-2 xb - theta xi^-2 (a^4 - ga) = 0
    let mut cross_b = p("b x");
    cross_b.add_term(w(&["x", "b"]), &ximinus2);
    let c2 = &th * &ximinus2;
    cross_b.add_term(w(&["a", "a", "a", "a"]), &-c2.clone());
    cross_b.add_term(w(&["g", "a"]), &c2);

    let relations = vec![
        p("a^6 - 1"),
        p("b^2"),
        comm_ba,
        p("g^6 - 1"),
        p("x^2 - 1 + g^2"),
        p("x g + g x"),
        p("a g - g a"),
        p("b g + g b"),
        cross_a,
        cross_b,
    ];
    Presentation {
        alphabet,
        relations,
    }
}

pub(super) fn double_generator_data(pres: &Presentation) -> GeneratorData {
    let alph = pres.alphabet.clone();
    let p = |s: &str| poly(&alph, s);
    GeneratorData {
        comult: vec![
            (
                "a".into(),
                vec![
                    (p("a"), p("a"), CycQ6::one()),
                    (p("b a^3"), p("b"), CycQ6::xi_pow(4) + CycQ6::xi_pow(5)),
                ],
            ),
            (
                "b".into(),
                vec![
                    (p("b"), p("a"), CycQ6::one()),
                    (p("a^4"), p("b"), CycQ6::one()),
                ],
            ),
            ("g".into(), vec![(p("g"), p("g"), CycQ6::one())]),
            (
                "x".into(),
                vec![
                    (NCPoly::one(), p("x"), CycQ6::one()),
                    (p("x"), p("g"), CycQ6::one()),
                ],
            ),
        ],
        counit: vec![
            ("a".into(), CycQ6::one()),
            ("b".into(), CycQ6::zero()),
            ("g".into(), CycQ6::one()),
            ("x".into(), CycQ6::zero()),
        ],
        antipode: Some(vec![
            ("a".into(), p("a^5")),
            ("b".into(), p("b a").scale(&-CycQ6::xi_pow(-2))),
            ("g".into(), p("g^5")),
            ("x".into(), p("x g^5").neg()),
        ]),
        expand: vec![],
    }
}

/// Group algebra of Z6, the cosemisimple fixture.
pub fn build_z6() -> FDHopf {
    let dim = 6;
    let mult = (0..dim)
        .map(|i| (0..dim).map(|j| cv_unit((i + j) % dim)).collect())
        .collect();
    let comult = (0..dim).map(|i| vec![(i, i, CycQ6::one())]).collect();
    FDHopf {
        dim,
        labels: (0..dim).map(|i| format!("g^{i}")).collect(),
        mult,
        unit: cv_unit(0),
        comult,
        counit: vec![CycQ6::one(); dim],
        antipode: Some((0..dim).map(|i| cv_unit((dim - i) % dim)).collect()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopfcore::VerifyLevel;

    #[test]
    fn c_has_dim_12_and_passes_axioms() {
        let c = build_c();
        assert_eq!(c.hopf.dim, 12);
        let rep = c.hopf.verify(&VerifyLevel::Exhaustive);
        assert!(rep.pass(), "failures: {:?}", rep.failures());
    }

    #[test]
    fn c_coproduct_of_b() {
        let c = build_c();
        let b = c.index_of(&vec![0]).unwrap();
        let a = c.index_of(&vec![1]).unwrap();
        let a4 = c.element("a^4").unwrap()[0].0;
        // Delta(b) = b (x) a^4 + a (x) b
        let mut expect = Vec::new();
        crate::hopfcore::pv_add_term(&mut expect, b, a4, &CycQ6::one());
        crate::hopfcore::pv_add_term(&mut expect, a, b, &CycQ6::one());
        assert_eq!(c.hopf.comult[b], expect);
        // eps(a) = 1, eps(b) = 0
        assert!(c.hopf.counit[a].is_one());
        assert!(c.hopf.counit[b].is_zero());
    }

    #[test]
    fn c_basis_is_the_paper_basis() {
        let c = build_c();
        // {a^j, b a^j} for j in 0..6
        for j in 0..6 {
            assert!(c.element(&format!("a^{j}")).unwrap().len() == 1);
            assert!(c.element(&format!("b a^{j}")).unwrap().len() == 1);
        }
        assert_eq!(c.hopf.dim, 12);
    }

    #[test]
    fn a1_has_dim_12_and_passes_axioms() {
        let a1 = build_a1();
        assert_eq!(a1.hopf.dim, 12);
        let rep = a1.hopf.verify(&VerifyLevel::Exhaustive);
        assert!(rep.pass(), "failures: {:?}", rep.failures());
        // x^2 = 1 - g^2 and g^6 = 1 as table identities
        let x = a1.element("x").unwrap();
        let x2 = a1.hopf.mul(&x, &x);
        assert_eq!(x2, a1.element("1 - g^2").unwrap());
        let g = a1.element("g").unwrap();
        let mut g6 = a1.hopf.unit.clone();
        for _ in 0..6 {
            g6 = a1.hopf.mul(&g6, &g);
        }
        assert_eq!(g6, a1.hopf.unit);
    }

    #[test]
    fn a1_coproduct_of_x() {
        let a1 = build_a1();
        let x = a1.index_of(&vec![1]).unwrap();
        let g = a1.index_of(&vec![0]).unwrap();
        let one = a1.hopf.unit[0].0;
        let mut expect = Vec::new();
        crate::hopfcore::pv_add_term(&mut expect, x, one, &CycQ6::one());
        crate::hopfcore::pv_add_term(&mut expect, g, x, &CycQ6::one());
        assert_eq!(a1.hopf.comult[x], expect);
    }

    #[test]
    fn z6_passes_axioms() {
        let z6 = build_z6();
        let rep = z6.verify(&VerifyLevel::Exhaustive);
        assert!(rep.pass(), "failures: {:?}", rep.failures());
    }

    #[test]
    fn corrupted_coproduct_fails_bialgebra() {
        let c = build_c();
        let mut bad = c.hopf.clone();
        let a = c.index_of(&vec![1]).unwrap();
        // Drop the (xi^4+xi^5) b (x) ba^3 term: Delta(a) = a (x) a only.
        bad.comult[a] = vec![(a, a, CycQ6::one())];
        let rep = bad.verify(&VerifyLevel::Exhaustive);
        assert!(!rep.pass());
        assert!(rep
            .failures()
            .iter()
            .any(|c| c.name == "bialgebra" || c.name == "coassociativity"));
    }
}
