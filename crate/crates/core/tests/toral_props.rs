use orbistack::exactmath::IntegerMatrix;
use orbistack::toral::{
    glnz_conjugate, is_hyperbolic, is_hyperbolic_sturm, is_hyperbolic_trace, toral_stack_equiv,
    ConjugacyConfig, Method, Status,
};
use proptest::prelude::*;

type M2 = [[i64; 2]; 2];

fn mat(m: M2) -> IntegerMatrix {
    IntegerMatrix::from_i64(&m).unwrap()
}

fn mul(x: M2, y: M2) -> M2 {
    std::array::from_fn(|i| std::array::from_fn(|j| x[i][0] * y[0][j] + x[i][1] * y[1][j]))
}

fn det(m: M2) -> i64 {
    m[0][0] * m[1][1] - m[0][1] * m[1][0]
}

fn inv(m: M2) -> M2 {
    let d = det(m);
    [[d * m[1][1], -d * m[0][1]], [-d * m[1][0], d * m[0][0]]]
}

fn to_m2(m: &IntegerMatrix) -> M2 {
    std::array::from_fn(|i| std::array::from_fn(|j| i64::try_from(m.get(i, j)).unwrap()))
}

fn unimodular(max: i64) -> impl Strategy<Value = M2> {
    [-max..=max, -max..=max, -max..=max, -max..=max]
        .prop_filter("det = ±1", |e| (e[0] * e[3] - e[1] * e[2]).abs() == 1)
        .prop_map(|e| [[e[0], e[1]], [e[2], e[3]]])
}

fn hyperbolic(max: i64) -> impl Strategy<Value = M2> {
    unimodular(max).prop_filter("hyperbolic", |m| {
        let t = m[0][0] + m[1][1];
        if det(*m) == 1 {
            t.abs() > 2
        } else {
            t != 0
        }
    })
}

fn config(method: Method) -> ConjugacyConfig {
    ConjugacyConfig { method, bound: 20 }
}

fn holds(a: M2, b: M2, p: &IntegerMatrix) -> bool {
    let p = to_m2(p);
    det(p).abs() == 1 && mul(p, a) == mul(b, p)
}

proptest! {
    #[test]
    fn certificates_are_sound(a in hyperbolic(3), q in unimodular(2)) {
        let b = mul(mul(q, a), inv(q));
        for method in [Method::LatimerMacduffee, Method::BoundedSearch] {
            let v = glnz_conjugate(&mat(a), &mat(b), config(method)).unwrap();
            if method == Method::LatimerMacduffee {
                prop_assert_eq!(v.status, Status::Yes);
            }
            if v.status == Status::Yes {
                prop_assert!(holds(a, b, v.certificate.as_ref().unwrap()));
            }
        }
    }

    #[test]
    fn methods_never_contradict(a in hyperbolic(3), b in hyperbolic(3)) {
        let lm = glnz_conjugate(&mat(a), &mat(b), config(Method::LatimerMacduffee)).unwrap();
        let search = glnz_conjugate(&mat(a), &mat(b), config(Method::BoundedSearch)).unwrap();
        prop_assert_ne!(lm.status, Status::Unknown);
        if search.status == Status::Yes {
            prop_assert_eq!(lm.status, Status::Yes);
        }
        if lm.status == Status::No {
            prop_assert_ne!(search.status, Status::Yes);
        }
    }

    #[test]
    fn transitivity_by_composed_certificates(a in hyperbolic(2), q in unimodular(2), r in unimodular(2)) {
        let b = mul(mul(q, a), inv(q));
        let c = mul(mul(r, b), inv(r));
        let ab = glnz_conjugate(&mat(a), &mat(b), ConjugacyConfig::default()).unwrap();
        let bc = glnz_conjugate(&mat(b), &mat(c), ConjugacyConfig::default()).unwrap();
        let ac = glnz_conjugate(&mat(a), &mat(c), ConjugacyConfig::default()).unwrap();
        prop_assert_eq!((ab.status, bc.status, ac.status), (Status::Yes, Status::Yes, Status::Yes));
        let composed = bc.certificate.unwrap().mul(&ab.certificate.unwrap()).unwrap();
        prop_assert!(holds(a, c, &composed));
    }

    #[test]
    fn stack_verdict_is_conjugation_invariant(a in hyperbolic(3), b in hyperbolic(3), q in unimodular(2)) {
        let moved = mul(mul(q, a), inv(q));
        let before = toral_stack_equiv(&mat(a), &mat(b), ConjugacyConfig::default()).unwrap();
        let after = toral_stack_equiv(&mat(moved), &mat(b), ConjugacyConfig::default()).unwrap();
        prop_assert_eq!(before.status, after.status);
    }
}

#[test]
fn trace_test_agrees_with_sturm_on_all_small_matrices() {
    let mut checked = 0;
    for code in 0..9i64.pow(4) {
        let e: [i64; 4] = std::array::from_fn(|k| (code / 9i64.pow(k as u32)) % 9 - 4);
        if (e[0] * e[3] - e[1] * e[2]).abs() != 1 {
            continue;
        }
        let m = mat([[e[0], e[1]], [e[2], e[3]]]);
        let fast = is_hyperbolic_trace(&m).unwrap();
        assert_eq!(fast, is_hyperbolic_sturm(&m).unwrap(), "{m}");
        assert_eq!(fast, is_hyperbolic(&m).unwrap());
        checked += 1;
    }
    assert_eq!(checked, 360);
}

#[test]
fn three_by_three_uses_search() {
    let a = IntegerMatrix::from_i64(&[[0, 0, 1], [1, 0, -1], [0, 1, 3]]).unwrap();
    let q = IntegerMatrix::from_i64(&[[1, 1, 0], [0, 1, 0], [0, 0, 1]]).unwrap();
    let b = q.mul(&a).unwrap().mul(&q.inverse().unwrap()).unwrap();
    let v = glnz_conjugate(&a, &b, ConjugacyConfig::default()).unwrap();
    assert_eq!(v.status, Status::Yes);
    assert!(!v.notes.is_empty());
    let p = v.certificate.unwrap();
    assert!(p.is_unimodular());
    assert_eq!(p.mul(&a).unwrap(), b.mul(&p).unwrap());
}
