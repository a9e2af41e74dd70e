#include "syntonet/scale.hpp"

#include <cctype>
#include <cmath>
#include <fmt/format.h>

#include "syntonet/errors.hpp"

namespace syntonet {

namespace {

constexpr std::array<std::string_view, kNotesPerOctave> kPitchNames = {
    "C", "C#", "D", "D#", "E", "F", "F#", "G", "G#", "A", "A#", "B"};

std::array<double, kNotesPerOctave> equal_row() {
  std::array<double, kNotesPerOctave> r{};
  for (int i = 1; i <= 12; ++i) r[i - 1] = equal_ratio(i);
  return r;
}

// 5-limit just intonation on C.
std::array<double, kNotesPerOctave> just_row() {
  return {1.0,       25.0 / 24.0, 9.0 / 8.0, 6.0 / 5.0, 5.0 / 4.0, 4.0 / 3.0,
          45.0 / 32.0, 3.0 / 2.0, 8.0 / 5.0, 5.0 / 3.0, 9.0 / 5.0, 15.0 / 8.0};
}

// Quarter-comma meantone: fifths of 5^(1/4), chain Eb..G#.
std::array<double, kNotesPerOctave> meantone_row() {
  const double q = std::pow(5.0, 0.25);
  const double s5 = std::sqrt(5.0);
  return {1.0,
          q * q * q * q * q * q * q / 16.0,  // C#  5^(7/4)/16
          s5 / 2.0,                          // D
          4.0 / (q * q * q),                 // Eb  4/5^(3/4)
          5.0 / 4.0,                         // E
          2.0 / q,                           // F
          s5 * s5 * s5 / 8.0,                // F#  5^(3/2)/8
          q,                                 // G
          25.0 / 16.0,                       // G#
          q * q * q / 2.0,                   // A
          4.0 / s5,                          // Bb
          q * q * q * q * q / 4.0};          // B   5^(5/4)/4
}

// Pythagorean: stacked 3/2 fifths from Db to F#, reduced to the octave.
std::array<double, kNotesPerOctave> pythagorean_row() {
  return {1.0,          256.0 / 243.0, 9.0 / 8.0,  32.0 / 27.0,
          81.0 / 64.0,  4.0 / 3.0,     729.0 / 512.0, 3.0 / 2.0,
          128.0 / 81.0, 27.0 / 16.0,   16.0 / 9.0, 243.0 / 128.0};
}

// Werckmeister III ("correct temperament no. 1").
std::array<double, kNotesPerOctave> werckmeister_row() {
  const double r2 = std::sqrt(2.0);
  const double r4_2 = std::pow(2.0, 0.25);
  const double r4_8 = std::pow(8.0, 0.25);
  return {1.0,
          256.0 / 243.0,
          64.0 * r2 / 81.0,
          32.0 / 27.0,
          256.0 * r4_2 / 243.0,
          4.0 / 3.0,
          1024.0 / 729.0,
          8.0 * r4_8 / 9.0,
          128.0 / 81.0,
          1024.0 * r4_2 / 729.0,
          16.0 / 9.0,
          128.0 * r4_2 / 81.0};
}

}  // namespace

std::string_view to_string(TemperamentName name) {
  switch (name) {
    case TemperamentName::Equal: return "Equal";
    case TemperamentName::Just: return "Just";
    case TemperamentName::Meantone: return "Meantone";
    case TemperamentName::Pythagorean: return "Pythagorean";
    case TemperamentName::Werckmeister: return "Werckmeister";
  }
  return "?";
}

std::optional<TemperamentName> parse_temperament(std::string_view text) {
  std::string lower(text);
  for (auto& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  for (auto t : kAllTemperaments) {
    std::string name(to_string(t));
    for (auto& c : name) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (name == lower) return t;
  }
  return std::nullopt;
}

std::string_view pitch_class_name(std::size_t pitch_class) {
  if (pitch_class >= kNotesPerOctave) throw DomainError("pitch class out of range");
  return kPitchNames[pitch_class];
}

double equal_ratio(int i) {
  if (i < 1 || i > 12) throw DomainError(fmt::format("equal_ratio: step {} outside [1, 12]", i));
  return std::exp2(static_cast<double>(i - 1) / 12.0);
}

Temperament temperament_table(TemperamentName name) {
  switch (name) {
    case TemperamentName::Equal: return {name, equal_row()};
    case TemperamentName::Just: return {name, just_row()};
    case TemperamentName::Meantone: return {name, meantone_row()};
    case TemperamentName::Pythagorean: return {name, pythagorean_row()};
    case TemperamentName::Werckmeister: return {name, werckmeister_row()};
  }
  throw DomainError("unknown temperament");
}

Scale build_scale(const Temperament& temperament, double base_frequency, int octaves) {
  if (!(base_frequency > 0.0) || !std::isfinite(base_frequency))
    throw DomainError(fmt::format("build_scale: base frequency must be positive, got {}", base_frequency));
  if (octaves < 1) throw DomainError(fmt::format("build_scale: need at least one octave, got {}", octaves));

  Scale scale{temperament, base_frequency, static_cast<std::size_t>(octaves), {}};
  scale.notes.reserve(kNotesPerOctave * scale.octaves);
  for (std::size_t o = 0; o < scale.octaves; ++o) {
    const double tonic = std::ldexp(base_frequency, static_cast<int>(o));
    for (std::size_t p = 0; p < kNotesPerOctave; ++p) {
      scale.notes.push_back({kNotesPerOctave * o + p, o, p, tonic * temperament.ratios[p],
                             fmt::format("{}{}", kPitchNames[p], o + 1)});
    }
  }
  return scale;
}

}  // namespace syntonet
