#include "hyperq/classical/trajectory_csv.hpp"

#include <istream>
#include <ostream>
#include <stdexcept>

namespace hyperq::classical {

void write_trajectory_csv(std::ostream& out, const TrajectoryRecord& record) {
  for (std::size_t i = 0; i < kTrajectoryColumns.size(); ++i) {
    out << (i ? "," : "") << kTrajectoryColumns[i];
  }
  out << '\n';
  for (const Sample& s : record.samples) {
    const std::array<Real, 15> row = {
        s.t,         s.x[0],      s.x[1],      s.x[2],         s.p[0],
        s.p[1],      s.p[2],      s.theta,     s.phi,          s.diag.energy,
        s.diag.J[0], s.diag.J[1], s.diag.J[2], s.diag.c2,      s.diag.c3};
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_real(row[i]);
    out << '\n';
  }
}

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    out.push_back(line.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

Real parse_field(const std::string& field, std::size_t line_no) {
  try {
    return parse_real(field);
  } catch (const std::invalid_argument&) {
    throw std::runtime_error("bad number '" + field + "' on line " + std::to_string(line_no));
  }
}

}  // namespace

std::vector<Sample> read_trajectory_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty trajectory file");
  const auto header = split(line);
  if (header.size() != kTrajectoryColumns.size()) throw std::runtime_error("unexpected header");
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] != kTrajectoryColumns[i]) {
      throw std::runtime_error("unexpected column '" + header[i] + "'");
    }
  }
  std::vector<Sample> samples;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto fields = split(line);
    if (fields.size() != kTrajectoryColumns.size()) {
      throw std::runtime_error("wrong field count on line " + std::to_string(line_no));
    }
    std::array<Real, 15> v{};
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = parse_field(fields[i], line_no);
    Sample s;
    s.t = v[0];
    s.x = Vec{{v[1], v[2], v[3]}};
    s.p = Vec{{v[4], v[5], v[6]}};
    s.theta = v[7];
    s.phi = v[8];
    s.diag.energy = v[9];
    s.diag.J = {v[10], v[11], v[12]};
    s.diag.c2 = v[13];
    s.diag.c3 = v[14];
    samples.push_back(s);
  }
  return samples;
}

}  // namespace hyperq::classical
