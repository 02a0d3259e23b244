# Copyright 2026 The clusterqis Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Cluster-state teleportation and quantum information splitting."""

from ._clusterqis import (
    AccessError,
    BellOutcome,
    ClusterParams,
    ConfigError,
    LeakageReport,
    ParseError,
    PovmInvalidError,
    ProtocolError,
    QisResult,
    Table1Report,
    TeleportResult,
    access_structure,
    analytic_post_bsm,
    povm_k3_min_eigenvalue,
    povm_min_rho,
    psuc_closed_form,
    psuc_formula,
    qis,
    qis_with_eve,
    run_cli,
    sweep_fig1_csv,
    teleport,
    teleport_with_eve,
    verify_table1,
)

__all__ = [
    "AccessError",
    "BellOutcome",
    "ClusterParams",
    "ConfigError",
    "LeakageReport",
    "ParseError",
    "PovmInvalidError",
    "ProtocolError",
    "QisResult",
    "Table1Report",
    "TeleportResult",
    "access_structure",
    "analytic_post_bsm",
    "povm_k3_min_eigenvalue",
    "povm_min_rho",
    "psuc_closed_form",
    "psuc_formula",
    "qis",
    "qis_with_eve",
    "run_cli",
    "sweep_fig1_csv",
    "teleport",
    "teleport_with_eve",
    "verify_table1",
]
