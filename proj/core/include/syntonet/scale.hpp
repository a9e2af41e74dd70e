#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace syntonet {

enum class TemperamentName { Equal, Just, Meantone, Pythagorean, Werckmeister };

inline constexpr std::array<TemperamentName, 5> kAllTemperaments = {
    TemperamentName::Equal, TemperamentName::Just, TemperamentName::Meantone,
    TemperamentName::Pythagorean, TemperamentName::Werckmeister};

/// Frequency of C1 in Hz.
inline constexpr double kC1Frequency = 32.7032;
inline constexpr int kDefaultOctaves = 9;
inline constexpr std::size_t kNotesPerOctave = 12;

std::string_view to_string(TemperamentName name);
std::optional<TemperamentName> parse_temperament(std::string_view text);

/// Twelve within-octave ratios relative to the tonic, strictly increasing in [1, 2).
struct Temperament {
  TemperamentName name;
  std::array<double, kNotesPerOctave> ratios;
};

struct ScaleNote {
  std::size_t index;
  std::size_t octave;
  std::size_t pitch_class;
  double frequency;
  std::string label;
};

struct Scale {
  Temperament temperament;
  double base_frequency;
  std::size_t octaves;
  std::vector<ScaleNote> notes;
};

/// 2^((i-1)/12) for the 1-based chromatic step i in [1, 12].
double equal_ratio(int i);

/// Ratio table for one of the five supported temperaments. The non-equal rows
/// are built from their exact rational / surd definitions.
Temperament temperament_table(TemperamentName name);

/// Chromatic scale of `octaves` octaves starting at `base_frequency`
/// (octave 1 is the first octave, so labels read C1, C#1, ..., B1, C2, ...).
Scale build_scale(const Temperament& temperament, double base_frequency, int octaves);

/// "C", "C#", ..., "B".
std::string_view pitch_class_name(std::size_t pitch_class);

}  // namespace syntonet
