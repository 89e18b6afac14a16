#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cotsep {

enum class SeparatorKind { Newline, Hash, Star, BrOpen, BrSelfClose };

std::string_view separator_glyph(SeparatorKind kind);  // "\n", "#", "*", "<br>", "<br/>"

/// A separator token with its repetition count. Newline/Hash/Star allow
/// counts 1..3; the <br> tokens are atomic (count fixed at 1).
class Separator {
public:
    Separator(SeparatorKind kind, int count);  // throws std::invalid_argument on bad count

    SeparatorKind kind() const { return kind_; }
    int count() const { return count_; }
    std::string_view glyph() const { return separator_glyph(kind_); }
    bool newline_kind() const { return kind_ == SeparatorKind::Newline; }

    static Separator triple_skip() { return {SeparatorKind::Newline, 3}; }
    static Separator triple_hash() { return {SeparatorKind::Hash, 3}; }
    static Separator triple_star() { return {SeparatorKind::Star, 3}; }
    static Separator br_open() { return {SeparatorKind::BrOpen, 1}; }
    static Separator br_self_close() { return {SeparatorKind::BrSelfClose, 1}; }

    // Command-line vocabulary: tripleskip, triplehash, triplestar, br, brslash.
    static std::optional<Separator> from_name(std::string_view name);
    std::string name() const;

    bool operator==(const Separator&) const = default;

private:
    SeparatorKind kind_;
    int count_;
};

std::string render_separator(const Separator& sep);  // glyph repeated count times

enum class PlacementUnit { ExemplarEnd, BetweenSentences };

std::string_view placement_unit_name(PlacementUnit unit);  // "exemplar" / "sentence"
std::optional<PlacementUnit> placement_unit_from_name(std::string_view name);

/// Which separator(s) to apply and where. Vanilla applies none; Homogeneous
/// uses a single fixed separator; Heterogeneous cycles through a rotation,
/// one entry per exemplar index.
class SeparatorPolicy {
public:
    enum class Mode { Vanilla, Homogeneous, Heterogeneous };

    static SeparatorPolicy vanilla();
    static SeparatorPolicy homogeneous(Separator sep,
                                       PlacementUnit unit = PlacementUnit::ExemplarEnd);
    static SeparatorPolicy heterogeneous(std::vector<Separator> rotation,
                                         PlacementUnit unit = PlacementUnit::ExemplarEnd);
    // Default rotation: \n\n\n, ###, ***, <br>, <br/>.
    static SeparatorPolicy heterogeneous_default(PlacementUnit unit = PlacementUnit::ExemplarEnd);

    Mode mode() const { return mode_; }
    PlacementUnit unit() const { return unit_; }
    const std::vector<Separator>& rotation() const { return rotation_; }

    std::string fingerprint() const;   // stable id, e.g. "hom:tripleskip:exemplar"
    std::string method_label() const;  // report row label, e.g. "tripleskip"

    bool operator==(const SeparatorPolicy&) const = default;

private:
    SeparatorPolicy(Mode mode, std::vector<Separator> rotation, PlacementUnit unit);

    Mode mode_;
    std::vector<Separator> rotation_;  // empty for Vanilla, size 1 for Homogeneous
    PlacementUnit unit_;
};

/// Separator assigned to the exemplar at `index`, or nullopt under Vanilla.
std::optional<Separator> separator_for_index(const SeparatorPolicy& policy, std::size_t index);

}  // namespace cotsep
