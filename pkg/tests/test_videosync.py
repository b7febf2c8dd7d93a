import pytest

from climbtrace import (
    VideoLink,
    attach_video,
    auto_offset,
    frame_for_time,
    new_record,
    parse_filename_epoch,
)
from climbtrace.errors import UnknownClimb
from conftest import constant_trace


def test_parse_filename_epoch_standard_name():
    assert parse_filename_epoch("VID_1554034800123.mp4") == 1554034800123


def test_parse_filename_epoch_no_digits():
    assert parse_filename_epoch("myclimb.mp4") is None


def test_parse_filename_epoch_first_13_digit_run_wins():
    assert parse_filename_epoch("20190401_1554034800123_x.mp4") == 1554034800123


def test_parse_filename_epoch_ignores_wrong_width_runs():
    assert parse_filename_epoch("IMG_20190401.mp4") is None
    assert parse_filename_epoch("x_12345678901234_y.mp4") is None  # 14 digits
    assert parse_filename_epoch("a12345678901234b_1554034800123.mp4") == 1554034800123


def test_auto_offset_signs():
    climb = 1_554_034_800_000
    assert auto_offset(climb - 2000, climb) == 2000
    assert auto_offset(climb, climb) == 0
    assert auto_offset(climb + 500, climb) == -500


def test_frame_for_time_basic():
    link = VideoLink("v.mp4", offset_ms=1000, fps=30)
    assert frame_for_time(2.5, link) == 105


def test_frame_for_time_zero():
    assert frame_for_time(0.0, VideoLink("v.mp4")) == 0


def test_frame_for_time_clamps_negative():
    link = VideoLink("v.mp4", offset_ms=-2000, fps=30)
    assert frame_for_time(0.0, link) == 0


def test_frame_for_time_clamps_to_last_frame():
    link = VideoLink("v.mp4", offset_ms=0, fps=30)
    assert frame_for_time(100.0, link, last_frame=299) == 299


def test_frame_for_time_monotone():
    link = VideoLink("v.mp4", offset_ms=-700, fps=30)
    frames = [frame_for_time(i * 0.05, link) for i in range(400)]
    assert frames == sorted(frames)


def test_adjacent_grid_samples_land_within_two_frames():
    link = VideoLink("v.mp4", offset_ms=137, fps=30)
    for i in range(400):
        step = frame_for_time((i + 1) * 0.05, link) - frame_for_time(i * 0.05, link)
        assert 0 <= step <= 2


def test_video_link_requires_positive_fps():
    with pytest.raises(ValueError):
        VideoLink("v.mp4", fps=0)


def test_attach_video_auto_offset_from_filename(store):
    record = new_record(constant_trace(epoch_ms=1_554_034_803_000))
    store.save(record)
    updated = attach_video(store, record.id, "VID_1554034800000.mp4", fps=30)
    assert updated.video.offset_ms == 3000
    assert updated.video.fps == 30
    assert store.get(record.id).video == updated.video  # persisted, same id


def test_attach_video_fallback_offset_zero(store):
    record = new_record(constant_trace())
    store.save(record)
    updated = attach_video(store, record.id, "clip.mp4")
    assert updated.video.offset_ms == 0


def test_attach_video_explicit_offset_wins(store):
    record = new_record(constant_trace(epoch_ms=1_554_034_803_000))
    store.save(record)
    updated = attach_video(
        store, record.id, "VID_1554034800000.mp4", explicit_offset_ms=-250
    )
    assert updated.video.offset_ms == -250


def test_attach_video_unknown_climb(store):
    with pytest.raises(UnknownClimb):
        attach_video(store, "deadbeef", "clip.mp4")
