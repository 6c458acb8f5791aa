#include <algorithm>
#include <map>
#include <sstream>

#include "pbrp/io.hpp"

namespace pbrp {

namespace {

std::string strip(const std::string& s) {
  std::size_t begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  std::size_t end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  for (;;) {
    const std::size_t next = s.find(sep, pos);
    if (next == std::string::npos) {
      out.push_back(s.substr(pos));
      return out;
    }
    out.push_back(s.substr(pos, next - pos));
    pos = next + 1;
  }
}

// nonnegative decimal like "60000" or "19.99"
Rational parse_decimal(const std::string& text, const std::string& what) {
  const std::string t = strip(text);
  if (t.empty()) throw Error(ErrorCode::ParseError, what + " is empty");
  BigInt num = 0;
  BigInt den = 1;
  bool seen_dot = false;
  bool seen_digit = false;
  for (char c : t) {
    if (c == '.') {
      if (seen_dot) throw Error(ErrorCode::ParseError, what + " '" + t + "' is not a decimal");
      seen_dot = true;
    } else if (c >= '0' && c <= '9') {
      num = num * 10 + (c - '0');
      if (seen_dot) den *= 10;
      seen_digit = true;
    } else {
      throw Error(ErrorCode::ParseError, what + " '" + t + "' is not a decimal");
    }
  }
  if (!seen_digit) throw Error(ErrorCode::ParseError, what + " '" + t + "' is not a decimal");
  return Rational(num, den);
}

}  // namespace

const std::string* PabulibElection::meta_value(const std::string& key) const {
  for (const auto& [k, v] : meta) {
    if (k == key) return &v;
  }
  return nullptr;
}

PabulibElection parse_pabulib(const std::string& text) {
  enum class Section { None, Meta, Projects, Votes };
  Section section = Section::None;
  bool expect_columns = false;
  std::map<std::string, std::size_t> columns;

  PabulibElection election;
  std::map<std::string, bool> known_project;

  std::istringstream stream(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(stream, raw)) {
    ++line_no;
    const std::string line = strip(raw);
    if (line.empty()) continue;
    const std::string where = "line " + std::to_string(line_no);

    std::string header = line;
    while (!header.empty() && header.back() == ';') header.pop_back();
    if (header == "META" || header == "PROJECTS" || header == "VOTES") {
      section = header == "META" ? Section::Meta
                : header == "PROJECTS" ? Section::Projects
                                       : Section::Votes;
      expect_columns = true;
      continue;
    }
    if (section == Section::None) {
      throw Error(ErrorCode::ParseError, where + ": content before any section header");
    }

    const std::vector<std::string> fields = split(line, ';');
    if (expect_columns) {
      columns.clear();
      for (std::size_t i = 0; i < fields.size(); ++i) {
        columns[strip(fields[i])] = i;
      }
      const auto require = [&](const char* name) {
        if (!columns.count(name)) {
          throw Error(ErrorCode::ParseError,
                      where + ": missing column '" + std::string(name) + "'");
        }
      };
      if (section == Section::Meta) {
        require("key");
        require("value");
      } else if (section == Section::Projects) {
        require("project_id");
        require("cost");
      } else {
        require("voter_id");
        require("vote");
      }
      expect_columns = false;
      continue;
    }

    const auto cell = [&](const char* name) -> std::string {
      const std::size_t idx = columns.at(name);
      if (idx >= fields.size()) {
        throw Error(ErrorCode::ParseError, where + ": row is missing '" + std::string(name) + "'");
      }
      return strip(fields[idx]);
    };

    if (section == Section::Meta) {
      election.meta.emplace_back(cell("key"), cell("value"));
    } else if (section == Section::Projects) {
      PabulibProject project;
      project.id = cell("project_id");
      if (project.id.empty()) {
        throw Error(ErrorCode::ParseError, where + ": empty project_id");
      }
      if (known_project.count(project.id)) {
        throw Error(ErrorCode::ParseError, where + ": duplicate project " + project.id);
      }
      project.cost = parse_decimal(cell("cost"), where + " cost");
      if (columns.count("name")) project.name = cell("name");
      known_project[project.id] = true;
      election.projects.push_back(std::move(project));
    } else {
      PabulibVote vote;
      vote.voter_id = cell("voter_id");
      const std::string ballot = cell("vote");
      if (!ballot.empty()) {
        for (const std::string& id_raw : split(ballot, ',')) {
          const std::string id = strip(id_raw);
          if (!known_project.count(id)) {
            throw Error(ErrorCode::ParseError, where + ": vote references unknown project '" +
                                                   id + "'");
          }
          if (std::find(vote.approved.begin(), vote.approved.end(), id) ==
              vote.approved.end()) {
            vote.approved.push_back(id);
          }
        }
      }
      election.votes.push_back(std::move(vote));
    }
  }

  for (const char* key : {"budget", "vote_type", "num_votes"}) {
    if (!election.meta_value(key)) {
      throw Error(ErrorCode::ParseError, std::string("META is missing '") + key + "'");
    }
  }
  if (*election.meta_value("vote_type") != "approval") {
    throw Error(ErrorCode::UnsupportedVoteType,
                "vote_type '" + *election.meta_value("vote_type") + "' is not approval");
  }
  parse_decimal(*election.meta_value("budget"), "META budget");
  return election;
}

Instance pabulib_to_instance(const PabulibElection& election) {
  if (election.votes.empty()) {
    throw Error(ErrorCode::NoVoters, "election has no votes");
  }
  std::size_t total_approvals = 0;
  for (const auto& vote : election.votes) total_approvals += vote.approved.size();
  if (total_approvals == 0) {
    throw Error(ErrorCode::NoApprovals, "election has no approvals");
  }

  const Rational budget = parse_decimal(*election.meta_value("budget"), "META budget");
  const Rational share = budget / static_cast<int>(election.votes.size());

  Instance inst;
  std::map<std::string, int> index_of_project;
  Rational grand_cost = 0;
  for (const auto& project : election.projects) {
    index_of_project[project.id] = inst.project_count();
    inst.projects.push_back({project.name.empty() ? project.id : project.name, project.cost});
    grand_cost += project.cost;
  }

  // every approval is worth the same scalar, chosen so the grand bundle is
  // worth exactly its total cost
  const Rational scalar = grand_cost / static_cast<int>(total_approvals);
  for (const auto& vote : election.votes) {
    AdditiveValuation valuation;
    valuation.values.assign(inst.project_count(), Rational(0));
    for (const auto& id : vote.approved) {
      valuation.values[index_of_project.at(id)] = scalar;
    }
    inst.agents.push_back({share, std::move(valuation)});
  }
  return inst;
}

}  // namespace pbrp
