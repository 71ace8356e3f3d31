#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Copyright 2026 The lfpp authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
"""

import logging
import os
import tempfile
from importlib import resources
from mako.template import Template
from sqlalchemy.event import listen
from lfpp.exc import TransactionError

__all__ = ['ActivityLog', 'Action', 'NOOP', 'write', 'remove', 'render']


class NOOP(Exception):
    """ raised by an action that has nothing to do """


class ActivityLog(object):
    """ Pending filesystem outputs of one run or one cache update.

        Every action prepares its effect when it is added (a temporary file,
        a file moved aside); ``commit`` publishes all of them in order and
        ``rollback`` discards them, newest first. ``attach_to`` binds a log
        to a SQLAlchemy session so artifacts land together with their index
        rows.
    """

    def __init__(self, autobegin=True):
        self.log = logging.getLogger("{}.{}".format(__name__,
                                                    self.__class__.__name__))
        self.autobegin = autobegin
        self.active = False
        self.pending = []
        if autobegin:
            self.begin()

    @classmethod
    def attach_to(cls, session, activity_log=None, **kwargs):
        outputs = activity_log or cls(**kwargs)
        session.activity_log = outputs
        listen(session, 'before_commit', lambda s: outputs.commit())
        listen(session, 'after_rollback', lambda s: outputs.rollback())
        return outputs

    def __len__(self):
        return len(self.pending)

    def begin(self):
        self.pending = []
        self.active = True

    def add(self, action, *args, **kwargs):
        """ prepare ``action``; a failure discards everything pending """
        try:
            prepared = action(*args, **kwargs)

        except NOOP:
            return None

        except Exception as e:
            self.log.error("Cannot prepare %s: %s", action.__name__, e)
            self.rollback(exc=e)

        self.pending.append(prepared)
        return prepared

    def _close(self, what):
        if not self.active:
            raise TransactionError("{} outside a transaction".format(what))
        self.active = False
        actions, self.pending = self.pending, []
        return actions

    def _reopen(self):
        if self.autobegin:
            self.begin()

    def rollback(self, exc=None):
        actions = self._close('rollback')
        self.log.debug("Discarding %d pending outputs", len(actions))
        first_error = exc
        try:
            for action in reversed(actions):
                try:
                    action.rollback()

                except Exception as e:
                    self.log.exception("Cannot undo %s", action)
                    first_error = first_error or e

        finally:
            self._reopen()

        if first_error is not None:
            raise first_error

    def commit(self):
        actions = self._close('commit')
        self.log.debug("Publishing %d pending outputs", len(actions))
        try:
            for done, action in enumerate(actions):
                try:
                    action.commit()

                except Exception as e:
                    self.log.exception("Cannot publish %s", action)
                    self.active, self.pending = True, actions[done + 1:]
                    self.rollback(exc=e)

        finally:
            self._reopen()


class Action(object):
    """ One filesystem effect with two outcomes, ``commit`` or
        ``rollback``; subclasses prepare it in ``__init__``. """

    path = None

    def __init__(self):
        self.log = logging.getLogger("{}.{}".format(
            self.__class__.__module__, self.__class__.__name__))

    def __repr__(self):
        return '<{} {}>'.format(self.__class__.__name__, self.path)

    def commit(self):  # pragma: nocover
        raise NotImplementedError

    def rollback(self):  # pragma: nocover
        raise NotImplementedError


class write(Action):
    """ Atomic file write: the content goes to a temporary file in the
        target directory and replaces ``path`` on commit. """

    def __init__(self, path, content):
        super(write, self).__init__()
        self.path = path
        directory = os.path.dirname(os.path.abspath(path))
        fd, self.tmp_path = tempfile.mkstemp(prefix='._',
                                             dir=directory)
        mode = 'wb' if isinstance(content, bytes) else 'w'
        try:
            with os.fdopen(fd, mode) as f:
                f.write(content)

        except Exception:
            os.unlink(self.tmp_path)
            raise

        self.log.debug("wrote %s (pending %s)", self.tmp_path, path)

    def commit(self):
        os.replace(self.tmp_path, self.path)
        self.log.debug("renamed %s to %s", self.tmp_path, self.path)

    def rollback(self):
        if os.path.exists(self.tmp_path):
            self.log.info("unlink %s", self.tmp_path)
            os.unlink(self.tmp_path)


class remove(Action):
    """ Delete ``path`` on commit; it is moved aside until then. """

    def __init__(self, path):
        super(remove, self).__init__()
        self.path = path
        if not os.path.exists(path):
            raise NOOP()
        self.tmp_path = os.path.join(os.path.dirname(path),
                                     "._{}".format(os.path.basename(path)))
        os.rename(path, self.tmp_path)

    def commit(self):
        self.log.info("unlink %s", self.path)
        os.unlink(self.tmp_path)

    def rollback(self):
        self.log.info("restoring %s", self.path)
        os.rename(self.tmp_path, self.path)


class render(write):
    """ a mako template of ``lfpp.templates`` written atomically """

    def __init__(self, template_name, path, **params):
        source = resources.files('lfpp.templates')\
                .joinpath(template_name).read_text()
        self.template_name = template_name
        super(render, self).__init__(path, Template(source).render(**params))
