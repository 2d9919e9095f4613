#pragma once

#include <stdexcept>
#include <string>

namespace selgames {

// Bad run configuration or group description. CLI maps this to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// A rule of the game was broken. Carries the inning and the offending side
// so a play can abort with a fault naming both. CLI maps this to exit code 1.
class LegalityError : public std::runtime_error {
 public:
  LegalityError(int inning, std::string actor, std::string rule,
                std::string details)
      : std::runtime_error("inning " + std::to_string(inning) + ": " + actor +
                           ": " + details),
        inning_(inning),
        actor_(std::move(actor)),
        rule_(std::move(rule)) {}

  int inning() const { return inning_; }
  const std::string& actor() const { return actor_; }
  const std::string& rule() const { return rule_; }

 private:
  int inning_;
  std::string actor_;
  std::string rule_;
};

// An enumeration outgrew its configured cap.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// An API precondition was violated (e.g. a cover without a declared bound
// handed to the P-group covering lemma).
class ContractError : public std::runtime_error {
 public:
  explicit ContractError(const std::string& what) : std::runtime_error(what) {}
};

// An element value outside its component group's domain.
class MalformedElement : public std::runtime_error {
 public:
  explicit MalformedElement(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace selgames
