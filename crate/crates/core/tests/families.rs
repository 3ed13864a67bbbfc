use sbc_core::classification::classify;
use sbc_core::families::*;
use sbc_core::{GroupType, Prime, SubgroupHol};

fn check_members(members: &[FamilyMember]) {
    for m in members {
        let s = m.subgroup().unwrap();
        assert!(s.is_regular(), "{:?}", m.params);
        assert_eq!(s.isomorphism_type().unwrap(), m.expected, "{:?}", m.params);
        let theta = ThetaSize::from_order(s.prime(), s.theta_image().len()).unwrap();
        assert_eq!(theta, m.params.theta);
    }
}

#[test]
fn every_family_member_is_regular_with_predicted_type() {
    let p = Prime::new(5).unwrap();
    let (tp, _) = families_theta_p(p);
    let (ci, cii, _) = families_theta_p2(p);
    let (t3, _) = families_theta_p3(p);
    for fam in [&tp, &ci, &cii, &t3] {
        check_members(fam);
    }
}

#[test]
fn degenerate_theta_p3_subcase_is_never_regular() {
    let p = Prime::new(5).unwrap();
    for u1 in 0..5 {
        for v1 in 0..5 {
            for w1 in 0..5 {
                for w3 in 0..5 {
                    let gens = theta_p3_degenerate(p, u1, v1, w1, w3);
                    let s = SubgroupHol::generate(p, &gens).unwrap();
                    assert!(!s.is_regular(), "u1={u1} v1={v1} w1={w1} w3={w3}");
                }
            }
        }
    }
}

#[test]
fn representatives_match_their_expected_type() {
    for q in [5, 7] {
        let p = Prime::new(q).unwrap();
        for r in all_representatives(p) {
            let s = r.subgroup().unwrap();
            assert!(s.is_regular(), "{}", r.id);
            assert_eq!(s.isomorphism_type().unwrap(), r.expected, "{}", r.id);
        }
    }
}

#[test]
fn sylow_copies_stay_regular() {
    let p = Prime::new(5).unwrap();
    for r in all_representatives(p) {
        for d in 0..5 {
            let gens = sylow_copy(&r.generators, pairing_matrix(p, d));
            let s = SubgroupHol::generate(p, &gens).unwrap();
            assert!(s.is_regular(), "{} d={d}", r.id);
        }
    }
}

#[test]
fn classification_at_five_and_seven() {
    for (q, m1, ab) in [(5u64, 48, 11), (7, 94, 15)] {
        let p = Prime::new(q).unwrap();
        let c = classify(p, &all_representatives(p), false).unwrap();
        assert!(c.consistent(), "p={q}");
        assert!(c.stabilizers_as_predicted(), "p={q}");
        let count = |t| c.records.iter().filter(|r| r.structure == t).count();
        assert_eq!(count(GroupType::HeisenbergM1), m1);
        assert_eq!(count(GroupType::ElemAbelianP3), ab);
    }
}
