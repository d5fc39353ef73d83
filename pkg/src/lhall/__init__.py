"""Exact delta-vectors, Ehrhart values and parallelepiped bijections for
s-lecture hall polytopes."""

from .ehrhart import (DeltaVector, EhrhartValue, delta, delta_via_ascents,
                      delta_via_descents, delta_via_parallelepiped,
                      ehrhart_direct, ehrhart_from_delta, series_check)
from .errors import (InvalidInput, LectureHallError, NotInParallelepiped,
                     PreconditionError, SizeCapExceeded)
from .parbox import (GradedPointSet, enumerate_par, grade, kr, par_contains,
                     phi, phi_q, rem, rem_bar, rem_bar_q, rem_inv, rem_q)
from .reversal import (BijectionTrace, check_rev_identity, check_s1_identity,
                       check_tilde_identity, gamma, prop64_map,
                       reversal_point_map)
from .seq import (KRPair, Seq, Word, drop_last, enumerate_words, make_seq,
                  pad_zero, parse_seq, reverse_seq, star, tilde)
from .stats import (des_count_distribution, des_set, eulerian, inversion_sequence,
                    perm_from_inversion_sequence, s_asc_set, s_des_before, s_des_set)

__version__ = "0.1.0"
