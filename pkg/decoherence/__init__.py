from .channel import (
    FlipKind, FlipChannel, ChannelParameterError,
    apply_channel, scale_components, kraus_operators, apply_channel_to_density_matrix,
)
from .trajectory import (
    EventKind, TrajectorySample, TrajectoryEvent, CSV_COLUMNS,
    trajectory, trajectory_frame, analytic_event_times, event_scales,
    is_edge_class, reaches_axis,
    trajectory_discord_closed_form, trajectory_joint_entropy,
)
