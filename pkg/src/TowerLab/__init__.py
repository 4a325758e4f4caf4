__version__ = '0.1.0'

from .Objects.window import Window
from .Objects.settings import Settings
from .Objects.errors import *
from .Objects.Verdict import ConsistentAtScale, Refuted

from .Objects.Grid.PointSet import Point, PointSet, set_difference
from .Objects.Grid.PartialFunction import PartialFunction, pf_disjoint

from .Objects.Partitions.Colors import AColor, BColor, Block, parse_color
from .Objects.Partitions.DFamily import d_element, d_locate, cantor_pair, cantor_unpair
from .Objects.Partitions.Vertical import Vertical
from .Objects.Partitions.Rows import Rows
from .Objects.Partitions.EPartition import EPartition, e_color
from .Objects.Partitions.TablePartition import TablePartition
from .Objects.Partitions.Coloring import build_coloring, intersection_count

from .Objects.Ideals.Certificate import Budget, Certificate
from .Objects.Ideals.Ideal import IdealKind, make_ideal, check_certificate, fit_certificate, ideal_inclusions
from .Objects.Ideals.Game import *

from .Objects.Towers.Tower import Tower, TowerSequence, validate_tower, tower_from_json
from .Objects.Towers.TowerSearch import search_tower, search_ed_sequence
from .Objects.Towers.Pigeonhole import uncovered_omega, uncovered_kk

from .Objects.Chains.Chain import Chain, materialize_chain, descend_chain, down_color
from .Objects.Chains.Coverage import interval_pigeonhole, extract_covered
from .Objects.Chains.PQ import pq_sequence, required_window
from .Objects.Chains.Refutation import Mode, refute_witness

from .Criteria.AdGen import adgen_verdict
from .Criteria.Table2 import table2_verdict
from .Criteria.TowerCriteria import ref1_verdict, veze_verdict, ed_ofin_verdict, sufficient_scan
from .Criteria.Table1 import table1_reproduce, render_table1
from .Criteria.Claims import observation_report, verify_claims

from .Examples.Flagship import flagship_report
