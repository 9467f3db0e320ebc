// Copyright 2026 The eacap authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "eacap/channels.hpp"
#include "eacap/commands.hpp"
#include "eacap/experiment.hpp"
#include "eacap/information.hpp"
#include "eacap/matrix.hpp"
#include "eacap/output.hpp"
#include "eacap/quantum.hpp"
#include "eacap/verify.hpp"
#include "eacap/version.hpp"
