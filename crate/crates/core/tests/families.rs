use eo_core::catalog::{build_module, decomposable_a2_list, GroupSchemeName, Indecomposable};
use eo_core::dieudonne::{self, MonomialModule};
use eo_core::strata::{self, FinalType};

fn name(l: usize, factors: &[(usize, usize)]) -> GroupSchemeName {
    let factors = factors
        .iter()
        .map(|&(r, a)| Indecomposable::new(r, a).unwrap())
        .collect();
    GroupSchemeName::new(l, factors).unwrap()
}

fn nu_of(m: &MonomialModule) -> Vec<u32> {
    m.canonical_filtration().unwrap().final_type.nu().to_vec()
}

#[test]
fn ordinary_part_plus_one_i_r_1() {
    for g in 1..=10 {
        for f in 0..g {
            let m = build_module(&name(f, &[(g - f, 1)]));
            let want: Vec<u32> = (1..=g)
                .map(|i| if i <= f { i } else { i - 1 } as u32)
                .collect();
            assert_eq!(nu_of(&m), want, "g={g} f={f}");
            let t = FinalType::new(g, want).unwrap();
            assert_eq!(t.to_young().parts(), &[(g - f) as u32]);
            assert_eq!((m.p_rank(), m.a_number()), (f, 1));
        }
    }
}

#[test]
fn ordinary_part_plus_superspecial_part() {
    for g in 1..=10 {
        for f in 0..=g {
            let m = build_module(&name(f, &vec![(1, 1); g - f]));
            let want: Vec<u32> = (1..=g).map(|i| i.min(f) as u32).collect();
            assert_eq!(nu_of(&m), want, "g={g} f={f}");
            let mu: Vec<u32> = (1..=(g - f) as u32).rev().collect();
            assert_eq!(FinalType::new(g, want).unwrap().to_young().parts(), &mu[..]);
            assert_eq!((m.p_rank(), m.a_number()), (f, g - f));
        }
    }
}

#[test]
fn i_r_2_family() {
    for r in 3..=8 {
        let m = dieudonne::module_i_r_2(r).unwrap();
        let mut want: Vec<u32> = (0..r as u32 - 1).collect();
        want.push(r as u32 - 2);
        assert_eq!(nu_of(&m), want, "r={r}");
        assert_eq!((m.p_rank(), m.a_number()), (0, 2));
    }
}

#[test]
fn conservation_of_dimension() {
    for g in 1..=10 {
        for t in strata::enumerate_final_types(g).unwrap() {
            assert_eq!(t.dim() + t.to_young().codim(), g * (g + 1) / 2);
        }
    }
}

#[test]
fn interaction_bound_on_standard_modules() {
    for g in 1..=6 {
        for t in strata::enumerate_final_types(g).unwrap() {
            let rep = dieudonne::standard_module(&t)
                .unwrap()
                .canonical_filtration()
                .unwrap();
            assert_eq!(rep.interaction.len(), g);
            for (i, &d) in (1..=g).zip(&rep.interaction) {
                assert!(d + t.at(i) as usize >= i, "{t} at {i}");
            }
            assert_eq!(rep.interaction[g - 1], t.a_number(), "{t}");
        }
    }
}

#[test]
fn interaction_extremes() {
    for g in 1..=8 {
        let ord = build_module(&name(g, &[])).canonical_filtration().unwrap();
        assert_eq!(ord.interaction[g - 1], 0);
        let ss = build_module(&name(0, &vec![(1, 1); g]))
            .canonical_filtration()
            .unwrap();
        assert_eq!(ss.interaction, (1..=g).collect::<Vec<_>>());
    }
}

#[test]
fn decomposable_a2_counts() {
    for g in 2..=8 {
        let list = decomposable_a2_list(g).unwrap();
        assert_eq!(list.len(), g / 2);
        let mut seen = Vec::new();
        for n in &list {
            let m = build_module(n);
            assert_eq!((m.p_rank(), m.a_number()), (0, 2), "{n}");
            let t = m.final_type().unwrap();
            assert!(!seen.contains(&t), "{n}");
            seen.push(t);
        }
    }
}

#[test]
fn one_further_a2_type_in_dimensions_three_and_four() {
    for g in [3, 4] {
        let decomposable: Vec<FinalType> = decomposable_a2_list(g)
            .unwrap()
            .iter()
            .map(|n| build_module(n).final_type().unwrap())
            .collect();
        let rest: Vec<FinalType> = strata::enumerate_final_types(g)
            .unwrap()
            .into_iter()
            .filter(|t| t.p_rank() == 0 && t.a_number() == 2 && !decomposable.contains(t))
            .collect();
        assert_eq!(rest.len(), 1);
        let i_g_2 = dieudonne::module_i_r_2(g).unwrap();
        assert_eq!(i_g_2.final_type().unwrap(), rest[0]);
    }
}

#[test]
fn kernel_dimensions() {
    let i21 = dieudonne::module_i_r_1(2).unwrap();
    assert_eq!(i21.preimage_v(&i21.kernel_v()).dim(), 3);
    let i11 = dieudonne::module_i_r_1(1).unwrap();
    assert_eq!(i11.kernel_f().intersect(&i11.kernel_v()).dim(), 1);
    for r in 1..=6 {
        let m = dieudonne::module_i_r_1(r).unwrap();
        assert_eq!(m.kernel_f().intersect(&m.kernel_v()).dim(), 1, "r={r}");
    }
}
