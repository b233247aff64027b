#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace mazetree {

using Coord = std::int64_t;

/// A lattice point. Its length equals the maze dimension wherever the two meet.
using Point = std::vector<Coord>;

/// One of the 2d primitive moves: shift coordinate `feature` by `dir`.
struct Action {
  int feature = 0;  // 0-based internally; file formats and labels are 1-based
  int dir = +1;     // +1 or -1

  friend bool operator==(const Action&, const Action&) = default;
};

/// Open axis-aligned hyperrectangle: the set of x with a[i] < x[i] < b[i] for
/// every i. The boundary is free space.
struct Obstacle {
  Point a;
  Point b;

  friend bool operator==(const Obstacle&, const Obstacle&) = default;
};

struct Maze {
  int dimension = 0;
  Point goal;
  std::vector<Obstacle> obstacles;
};

inline void require_dimension(const Maze& maze, const Point& p, const char* what) {
  if (static_cast<int>(p.size()) != maze.dimension) {
    throw std::invalid_argument(std::string(what) + ": point has dimension " +
                                std::to_string(p.size()) + ", maze has " +
                                std::to_string(maze.dimension));
  }
}

/// Strict-interior membership test for a single obstacle.
inline bool inside(const Obstacle& obstacle, const Point& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!(obstacle.a[i] < p[i] && p[i] < obstacle.b[i])) return false;
  }
  return true;
}

/// True iff p lies strictly inside some obstacle. Boundary points are free.
inline bool contains_obstacle(const Maze& maze, const Point& p) {
  require_dimension(maze, p, "contains_obstacle");
  for (const Obstacle& obstacle : maze.obstacles) {
    if (inside(obstacle, p)) return true;
  }
  return false;
}

/// Deterministic blocked-move transition: moves from the goal, or moves that
/// would land inside an obstacle, stay in place.
inline Point transition(const Maze& maze, const Point& s, Action a) {
  require_dimension(maze, s, "transition");
  if (a.feature < 0 || a.feature >= maze.dimension || std::abs(a.dir) != 1) {
    throw std::invalid_argument("transition: bad action");
  }
  if (s == maze.goal) return s;
  Point moved = s;
  moved[a.feature] += a.dir;
  if (contains_obstacle(maze, moved)) return s;
  return moved;
}

/// Unit cost everywhere except the absorbing goal.
inline int step_cost(const Maze& maze, const Point& s) {
  return s == maze.goal ? 0 : 1;
}

/// Checks the representation invariants. Returns an empty list when the maze
/// is well formed; otherwise one message per violation, with the offending
/// obstacle/feature index.
inline std::vector<std::string> validate(const Maze& maze) {
  std::vector<std::string> violations;
  if (maze.dimension < 1) {
    violations.push_back("dimension must be >= 1, got " + std::to_string(maze.dimension));
    return violations;
  }
  if (static_cast<int>(maze.goal.size()) != maze.dimension) {
    violations.push_back("goal has dimension " + std::to_string(maze.goal.size()));
    return violations;
  }
  for (std::size_t j = 0; j < maze.obstacles.size(); ++j) {
    const Obstacle& obstacle = maze.obstacles[j];
    if (static_cast<int>(obstacle.a.size()) != maze.dimension ||
        static_cast<int>(obstacle.b.size()) != maze.dimension) {
      violations.push_back("obstacle " + std::to_string(j) + ": length mismatch");
      continue;
    }
    for (int i = 0; i < maze.dimension; ++i) {
      if (obstacle.a[i] >= obstacle.b[i]) {
        violations.push_back("empty obstacle " + std::to_string(j) + ", feature " +
                             std::to_string(i + 1));
      }
    }
  }
  if (violations.empty() && contains_obstacle(maze, maze.goal)) {
    for (std::size_t j = 0; j < maze.obstacles.size(); ++j) {
      if (inside(maze.obstacles[j], maze.goal)) {
        violations.push_back("goal inside obstacle " + std::to_string(j));
      }
    }
  }
  return violations;
}

/// Validate and throw on the first violation. Convenience for call sites that
/// treat a malformed maze as a programming error.
inline void validate_or_throw(const Maze& maze) {
  auto violations = validate(maze);
  if (!violations.empty()) {
    throw std::invalid_argument("invalid maze: " + violations.front());
  }
}

inline std::uint64_t manhattan(const Point& x, const Point& y) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    total += x[i] < y[i] ? static_cast<std::uint64_t>(y[i] - x[i])
                         : static_cast<std::uint64_t>(x[i] - y[i]);
  }
  return total;
}

inline std::string format_point(const Point& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(p[i]);
  }
  out += ")";
  return out;
}

}  // namespace mazetree
