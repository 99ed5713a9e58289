// Copyright 2026 The trajcomply Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TRAJCOMPLY__ERRORS_HPP_
#define TRAJCOMPLY__ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace trajcomply
{

class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

// Input bytes are not well-formed JSON.
class ParseError : public Error
{
public:
  using Error::Error;
};

// A field violates a type invariant. `field()` is a dotted/indexed path such as
// "drivable_area.polygons[0]".
class ValidationError : public Error
{
public:
  ValidationError(std::string field, const std::string & message)
  : Error(field.empty() ? message : field + ": " + message), field_(std::move(field)), message_(message)
  {
  }

  const std::string & field() const noexcept { return field_; }
  const std::string & message() const noexcept { return message_; }

  ValidationError prefixed(const std::string & parent) const
  {
    if (field_.empty()) {
      return {parent, message_};
    }
    const bool indexed = field_.front() == '[';
    return {parent + (indexed ? "" : ".") + field_, message_};
  }

private:
  std::string field_;
  std::string message_;
};

class IoError : public Error
{
public:
  using Error::Error;
};

class UnknownSceneId : public Error
{
public:
  explicit UnknownSceneId(std::vector<std::string> ids)
  : Error(make_message(ids)), ids_(std::move(ids))
  {
  }
  const std::vector<std::string> & ids() const noexcept { return ids_; }

private:
  static std::string make_message(const std::vector<std::string> & ids)
  {
    std::string msg = "unknown scene id(s):";
    for (const auto & id : ids) {
      msg += " " + id;
    }
    return msg;
  }
  std::vector<std::string> ids_;
};

class LengthMismatch : public Error
{
public:
  using Error::Error;
};

class EmptyCenterlines : public Error
{
public:
  EmptyCenterlines() : Error("centerline set is empty") {}
};

class EmptyCorpus : public Error
{
public:
  EmptyCorpus() : Error("corpus contains no scenes") {}
};

class NonFiniteLoss : public Error
{
public:
  NonFiniteLoss(std::string component, int iteration)
  : Error(
      "non-finite " + component + " loss at iteration " + std::to_string(iteration)),
    component_(std::move(component))
  {
  }
  const std::string & component() const noexcept { return component_; }

private:
  std::string component_;
};

class DegenerateHeading : public Error
{
public:
  DegenerateHeading() : Error("ego heading is undefined: history is stationary") {}
};

// Array shapes passed to the batch interface are inconsistent.
class ShapeError : public Error
{
public:
  using Error::Error;
};

}  // namespace trajcomply

#endif  // TRAJCOMPLY__ERRORS_HPP_
