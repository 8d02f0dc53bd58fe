import math
import numpy as np
import pytest
from numpy.testing import assert_allclose
from hypothesis import given, strategies as st

from utils import DomainError
from bell.state import UnphysicalStateError, density_matrix
from bell.measures import binary_entropy, discord, joint_entropy
from decoherence.channel import *
from decoherence.trajectory import *
from conftest import physical_states

FIG_STATE = (1, -0.3, 0.3)


class TestChannel:
    def test_identity(self):
        c = (0.5, -0.2, 0.1)
        assert_allclose(apply_channel(c, FlipChannel.from_probability('phase', 0)), c)

    def test_full_dephasing(self):
        c = (0.5, -0.2, 0.1)
        assert_allclose(apply_channel(c, FlipChannel.from_probability('phase', 0.5)), (0, 0, 0.1))

    def test_scale(self):
        out = scale_components(FIG_STATE, FlipKind.PHASE, 0.5)
        assert_allclose(out, (0.5, -0.15, 0.3))
        assert_allclose(out.c2 / out.c1, FIG_STATE[1] / FIG_STATE[0])

    @pytest.mark.parametrize('kind, axis', [('bit', 0), ('bitphase', 1), ('phase', 2)])
    def test_preserved_component(self, kind, axis):
        out = apply_channel((0.4, -0.3, 0.2), FlipChannel.from_probability(kind, 0.1))
        assert out[axis] == (0.4, -0.3, 0.2)[axis]
        for j in FlipKind(kind).decaying:
            assert_allclose(out[j], (0.4, -0.3, 0.2)[j] * 0.8 ** 2)

    def test_rate_form(self):
        ch = FlipChannel.from_rate('phase', 2.0, 0.5)
        assert_allclose(ch.scale, math.exp(-1))

    @pytest.mark.parametrize('kwds', [dict(p=0.6), dict(p=-0.1), dict(gamma=-1, t=1),
                                      dict(gamma=1, t=-1), dict(gamma=1), dict(p=0.1, gamma=1, t=1)])
    def test_bad_parameters(self, kwds):
        with pytest.raises(ChannelParameterError):
            FlipChannel('phase', **kwds)

    def test_bad_kind(self):
        with pytest.raises(ValueError):
            FlipChannel('amplitude', p=0.1)

    def test_unphysical(self):
        with pytest.raises(UnphysicalStateError):
            apply_channel((2, 0, 0), FlipChannel.from_probability('phase', 0.1))

    @given(physical_states(), st.floats(0, 0.5), st.floats(0, 0.5))
    def test_semigroup(self, c, p1, p2):
        ch1 = FlipChannel.from_probability('phase', p1)
        ch2 = FlipChannel.from_probability('phase', p2)
        twice = apply_channel(apply_channel(c, ch1), ch2)
        assert_allclose(twice, scale_components(c, 'phase', ch1.scale * ch2.scale), atol=1e-15)

    @given(physical_states(), st.floats(0, 0.5))
    def test_kinds_related_by_permutation(self, c, p):
        # bit flips on (c3, c2, c1) act like phase flips on (c1, c2, c3)
        phase = apply_channel(c, FlipChannel.from_probability('phase', p))
        bit = apply_channel(c[::-1], FlipChannel.from_probability('bit', p))
        assert_allclose(bit[::-1], phase)
        bitphase = apply_channel((c[0], c[2], c[1]), FlipChannel.from_probability('bitphase', p))
        assert_allclose((bitphase[0], bitphase[2], bitphase[1]), phase)


class TestKraus:
    @pytest.mark.parametrize('kind', ['phase', 'bit', 'bitphase'])
    def test_trace_preserving(self, kind):
        ks = kraus_operators(kind, 0.3)
        assert_allclose(sum(k.conj().T @ k for k in ks), np.eye(2), atol=1e-15)

    @pytest.mark.parametrize('kind', ['phase', 'bit', 'bitphase'])
    @pytest.mark.parametrize('p', [0, 0.1, 0.35, 0.5])
    def test_matches_correlation_map(self, kind, p):
        c = (0.4, -0.3, 0.2)
        ch = FlipChannel.from_probability(kind, p)
        assert_allclose(apply_channel_to_density_matrix(density_matrix(c), ch),
                        density_matrix(apply_channel(c, ch)), atol=1e-14)

    def test_rate_form(self):
        ch = FlipChannel.from_rate('bit', 1.0, 0.7)
        assert_allclose(apply_channel_to_density_matrix(density_matrix(FIG_STATE), ch),
                        density_matrix(apply_channel(FIG_STATE, ch)), atol=1e-14)


class TestTrajectory:
    def test_straight_line(self):
        samples = trajectory(FIG_STATE, 'phase', gamma=1, t_max=3, steps=31)
        assert len(samples) == 31
        for s in samples:
            assert s.c.c3 == 0.3
            assert_allclose(s.c.c2, -0.3 * s.c.c1, atol=1e-15)

    def test_frozen_then_decreasing_discord(self):
        samples = trajectory(FIG_STATE, 'phase', gamma=1, t_max=3, steps=301)
        frozen = [s.measures.discord for s in samples if s.c.c1 >= 0.3]
        after = [s.measures.discord for s in samples if s.c.c1 < 0.3]
        assert max(frozen) - min(frozen) <= 1e-12
        assert_allclose(frozen, 1 - binary_entropy(0.65), atol=1e-12)
        assert len(after) > 2 and np.all(np.diff(after) < 0)

    def test_entanglement_dies(self):
        samples = trajectory(FIG_STATE, 'phase', gamma=1, t_max=3, steps=301)
        eof = np.array([s.measures.eof for s in samples])
        assert np.all(np.diff(eof) <= 1e-15)
        death = math.log(1.3 / 0.7)
        assert all(s.measures.eof == 0 for s in samples if s.t >= death + 1e-9)
        assert all(s.measures.eof > 0 for s in samples if s.t < death - 1e-9)

    def test_axis_state_has_no_discord(self):
        for s in trajectory((0, 0, 0.6), 'phase', steps=11):
            assert abs(s.measures.discord) <= 1e-12

    def test_frame(self):
        df = trajectory_frame(trajectory(FIG_STATE, 'phase', steps=5))
        assert list(df.columns) == CSV_COLUMNS
        assert len(df) == 5
        assert df.t.iloc[0] == 0 and df.t.iloc[-1] == 3

    @pytest.mark.parametrize('kwds', [dict(steps=1), dict(gamma=-1), dict(t_max=-1)])
    def test_bad_arguments(self, kwds):
        with pytest.raises(DomainError):
            trajectory(FIG_STATE, 'phase', **kwds)


class TestEvents:
    def test_figure_state(self):
        events = analytic_event_times(FIG_STATE, 'phase', gamma=1)
        assert [e.kind for e in events] == [EventKind.SUDDEN_DEATH, EventKind.DISCORD_KINK]
        death, kink = events
        assert_allclose(death.t, math.log(1.3 / 0.7), atol=1e-9)
        assert_allclose(death.t, 0.61904, atol=1e-5)
        assert_allclose(death.c_at_event.c1, 0.7 / 1.3, atol=1e-9)
        assert_allclose(kink.t, math.log(1 / 0.3), atol=1e-9)
        assert_allclose(kink.t, 1.20397, atol=1e-5)
        assert_allclose(kink.c_at_event.c1, 0.3, atol=1e-9)

    def test_second_edge_state(self):
        # the kink at s = 0.6 comes before sudden death at s = 0.25
        kink, death = analytic_event_times((1, -0.6, 0.6), 'phase', gamma=1)
        assert kink.kind == EventKind.DISCORD_KINK
        assert death.kind == EventKind.SUDDEN_DEATH
        assert_allclose(death.t, math.log(4), atol=1e-12)
        assert_allclose(death.c_at_event.c1, 0.25, atol=1e-12)
        assert_allclose(kink.t, math.log(1 / 0.6), atol=1e-12)

    def test_brute_force_scan(self):
        c0 = (1, -0.6, 0.6)
        samples = trajectory(c0, 'phase', gamma=1, t_max=2, steps=20001)
        l1 = np.array([sum(map(abs, s.c)) for s in samples])
        t = np.array([s.t for s in samples])
        assert abs(t[np.argmax(l1 <= 1)] - math.log(4)) <= 1e-4

    def test_rate_scales_times(self):
        slow = analytic_event_times(FIG_STATE, 'phase', gamma=1)
        fast = analytic_event_times(FIG_STATE, 'phase', gamma=2)
        assert_allclose([e.t for e in fast], [e.t / 2 for e in slow])

    def test_axis_state(self):
        assert analytic_event_times((0, 0, 0.6), 'phase') == []
        assert not reaches_axis((0, 0, 0.6), 'phase')

    def test_no_rate(self):
        assert analytic_event_times(FIG_STATE, 'phase', gamma=0) == []
        assert not reaches_axis(FIG_STATE, 'phase', gamma=0)
        assert reaches_axis(FIG_STATE, 'phase', gamma=1)

    def test_general_state_by_bisection(self):
        c0 = (0.7, -0.2, 0.25)
        assert not is_edge_class(c0, 'phase')
        events = {e.kind: e for e in analytic_event_times(c0, 'phase', gamma=1)}
        kink = events[EventKind.DISCORD_KINK]
        assert_allclose(abs(kink.c_at_event.c1), 0.25, atol=1e-11)
        death = events[EventKind.SUDDEN_DEATH]
        assert_allclose(sum(map(abs, death.c_at_event)), 1, atol=1e-11)

    def test_separable_start_has_no_sudden_death(self):
        kinds = [e.kind for e in analytic_event_times((0.4, -0.2, 0.1), 'phase')]
        assert kinds == [EventKind.DISCORD_KINK]

    @pytest.mark.parametrize('kind', ['bit', 'bitphase'])
    def test_other_channels(self, kind):
        perm = dict(bit=[2, 1, 0], bitphase=[0, 2, 1])[kind]
        c0 = tuple(np.array(FIG_STATE)[perm])
        ref = analytic_event_times(FIG_STATE, 'phase')
        events = analytic_event_times(c0, kind)
        assert [e.kind for e in events] == [e.kind for e in ref]
        assert_allclose([e.t for e in events], [e.t for e in ref], atol=1e-12)

    def test_unphysical(self):
        with pytest.raises(UnphysicalStateError):
            analytic_event_times((2, 0, 0), 'phase')

    def test_event_dict(self):
        d = analytic_event_times(FIG_STATE, 'phase')[0].to_dict()
        assert list(d) == ['kind', 't', 'c1', 'c2', 'c3']
        assert d['kind'] == 'sudden_death'


class TestClosedForms:
    def test_figure_state(self):
        assert_allclose(trajectory_discord_closed_form(1, 0.3), 1 - binary_entropy(0.65), atol=1e-15)
        assert_allclose(trajectory_discord_closed_form(1, 0.3), 0.065932, atol=1e-6)

    def test_continuous_at_kink(self):
        assert_allclose(trajectory_discord_closed_form(0.3, 0.3), 1 - binary_entropy(0.65), atol=1e-15)

    def test_after_kink(self):
        assert_allclose(trajectory_discord_closed_form(0.1, 0.3), 1 - binary_entropy(0.55), atol=1e-15)
        assert_allclose(trajectory_discord_closed_form(0.1, 0.3), 0.00722, atol=1e-5)

    @given(st.floats(0, 1), st.floats(0, 1))
    def test_matches_general_formulas(self, c1, c3):
        c = (c1, -c3 * c1, c3)
        assert_allclose(trajectory_discord_closed_form(c1, c3), discord(c), atol=1e-12)
        assert_allclose(trajectory_joint_entropy(c1, c3), joint_entropy(c), atol=1e-12)

    def test_domain(self):
        with pytest.raises(DomainError):
            trajectory_discord_closed_form(1.2, 0.3)
        with pytest.raises(DomainError):
            trajectory_joint_entropy(0.5, -0.1)

    def test_factorized_entropy_sweep(self, rng):
        for c1, c3 in rng.uniform(0, 1, (1000, 2)):
            assert_allclose(joint_entropy((c1, -c3 * c1, c3)),
                            trajectory_joint_entropy(c1, c3), atol=1e-12)
