//! Structure report for one gyrogroup.

use serde_json::{json, Value};

use crate::caps::Caps;
use crate::commutator::{commutator_subgyrogroup, nc_commutator};
use crate::error::{GyroError, Result};
use crate::normality::normal_subgyrogroups;
use crate::nuclei::{left_nucleus, middle_nucleus, perm_layer, right_nucleus};
use crate::table::{Elem, GyroTable};

/// All sets are ascending element lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Analysis {
    pub order: usize,
    pub is_group: bool,
    pub is_gyrocommutative: bool,
    pub commutator_subgyrogroup: Vec<Elem>,
    pub commutator_subgyrogroup_normal: bool,
    pub normal_closure_of_commutators: Vec<Elem>,
    /// Equal to the middle nucleus.
    pub left_nucleus: Vec<Elem>,
    pub right_nucleus: Vec<Elem>,
    pub radical: Vec<Elem>,
    pub lmlt_order: usize,
    pub lg_sharp_order: usize,
    pub lg_prime_order: usize,
    pub normal_subgyrogroups: Vec<Vec<Elem>>,
}

pub fn analyze(g: &GyroTable, caps: &Caps) -> Result<Analysis> {
    let nl = left_nucleus(g)?;
    if middle_nucleus(g)? != nl {
        return Err(GyroError::Inconsistent(
            "left and middle nuclei differ".into(),
        ));
    }
    let layer = perm_layer(g, caps)?;
    let normals = normal_subgyrogroups(g, caps)?;
    let derived = commutator_subgyrogroup(g);
    Ok(Analysis {
        order: g.order(),
        is_group: g.is_group(),
        is_gyrocommutative: g.is_gyrocommutative(),
        commutator_subgyrogroup_normal: normals.contains(&derived),
        commutator_subgyrogroup: derived.members().to_vec(),
        normal_closure_of_commutators: nc_commutator(g, caps)?.members().to_vec(),
        left_nucleus: nl.members().to_vec(),
        right_nucleus: right_nucleus(g)?.members().to_vec(),
        radical: layer.radical.members().to_vec(),
        lmlt_order: layer.lmlt.order(),
        lg_sharp_order: layer.lg_sharp.len(),
        lg_prime_order: layer.lg_prime.len(),
        normal_subgyrogroups: normals.iter().map(|n| n.members().to_vec()).collect(),
    })
}

fn list(xs: &[Elem]) -> String {
    let parts: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
    format!("[{}]", parts.join(","))
}

impl Analysis {
    /// One object; `serde_json` maps keep keys sorted.
    pub fn to_json(&self) -> Value {
        json!({
            "order": self.order,
            "group": self.is_group,
            "gyrocommutative": self.is_gyrocommutative,
            "commutator_subgyrogroup": self.commutator_subgyrogroup,
            "commutator_subgyrogroup_normal": self.commutator_subgyrogroup_normal,
            "normal_closure_of_commutators": self.normal_closure_of_commutators,
            "left_nucleus": self.left_nucleus,
            "middle_nucleus": self.left_nucleus,
            "right_nucleus": self.right_nucleus,
            "radical": self.radical,
            "lmlt_order": self.lmlt_order,
            "lg_sharp_order": self.lg_sharp_order,
            "lg_prime_order": self.lg_prime_order,
            "normal_subgyrogroups": self.normal_subgyrogroups,
        })
    }

    pub fn to_text(&self) -> String {
        let normals: Vec<String> = self.normal_subgyrogroups.iter().map(|n| list(n)).collect();
        [
            format!("order: {}", self.order),
            format!("group: {}", self.is_group),
            format!("gyrocommutative: {}", self.is_gyrocommutative),
            format!(
                "commutator subgyrogroup: {}",
                list(&self.commutator_subgyrogroup)
            ),
            format!(
                "commutator subgyrogroup normal: {}",
                self.commutator_subgyrogroup_normal
            ),
            format!(
                "normal closure of commutators: {}",
                list(&self.normal_closure_of_commutators)
            ),
            format!(
                "left nucleus = middle nucleus: {}",
                list(&self.left_nucleus)
            ),
            format!("right nucleus: {}", list(&self.right_nucleus)),
            format!("radical: {}", list(&self.radical)),
            format!("|lmlt|: {}", self.lmlt_order),
            format!("|L(G)^#|: {}", self.lg_sharp_order),
            format!("|L(G)'|: {}", self.lg_prime_order),
            format!("normal subgyrogroups: {}", normals.join(" ")),
        ]
        .join("\n")
            + "\n"
    }
}
