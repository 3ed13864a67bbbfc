use sbc_core::brace::SkewBrace;
use sbc_core::families::{all_representatives, ThetaSize};
use sbc_core::{GroupType, Prime};

#[test]
fn every_brace_at_five() {
    let p = Prime::new(5).unwrap();
    for r in all_representatives(p) {
        let s = r.subgroup().unwrap();
        let b = SkewBrace::from_subgroup(&s).unwrap();
        let id = &r.id;
        assert_eq!(b.additive_type(), GroupType::HeisenbergM1, "{id}");
        assert_eq!(b.multiplicative_type(), r.expected, "{id}");
        assert!(b.verify_axiom().is_ok(), "{id}");
        assert!(b.verify_lambda(), "{id}");
        assert!(b.embedding_round_trip(), "{id}");

        let soc = b.socle();
        let ann = b.annihilator();
        let expected = if r.theta == ThetaSize::P3 { 1 } else { 5 };
        assert_eq!(soc.len(), expected, "{id}");
        assert_eq!(ann.len(), expected, "{id}");
        assert!(b.is_ideal(&soc) && b.is_ideal(&ann), "{id}");

        let y = b.ybe();
        assert!(y.verify_braid().is_ok(), "{id}");
        assert!(y.verify_nondegenerate(), "{id}");
        if r.theta == ThetaSize::P3 {
            assert!(!y.is_involutive(), "{id}");
        }
    }
}

#[test]
fn lambda_of_identity_is_identity() {
    let p = Prime::new(5).unwrap();
    for r in all_representatives(p).iter().step_by(9) {
        let b = SkewBrace::from_subgroup(&r.subgroup().unwrap()).unwrap();
        assert_eq!(b.lambda(0), b.labels().collect::<Vec<_>>());
    }
}

#[test]
fn socle_is_rho_for_small_theta() {
    let p = Prime::new(7).unwrap();
    let rho: Vec<u16> = (0..7).map(|a| (a * 49) as u16).collect();
    for r in all_representatives(p)
        .iter()
        .filter(|r| r.theta != ThetaSize::P3)
        .step_by(11)
    {
        let b = SkewBrace::from_subgroup(&r.subgroup().unwrap()).unwrap();
        assert_eq!(b.socle(), rho, "{}", r.id);
    }
}
