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

import os
import stat
import unittest
from sqlalchemy import create_engine
from sqlalchemy.orm import sessionmaker
from lfpp.cache import ActivityLog, Base, CacheEntry, remove, render, write
from lfpp.exc import TransactionError
from . import LfppTestsBase


class ActivityLogTests(LfppTestsBase):

    def test_write(self):
        al = ActivityLog()

        # test rollback
        file_ = self.path('test.txt')
        al.add(write, file_, "Test")
        self.assertFalse(os.path.exists(file_))
        self.assertEqual(len(os.listdir(self.tempdir)), 1)
        al.rollback()
        self.assertFalse(os.path.exists(file_))
        self.assertEqual(os.listdir(self.tempdir), [])

        # test successfull write
        al.add(write, file_, "Test")
        al.commit()
        with open(file_) as f:
            self.assertEqual(f.read(), "Test")
        self.assertEqual(os.listdir(self.tempdir), ['test.txt'])

        # bytes replace the previous content
        al.add(write, file_, b"\x00\x01")
        al.commit()
        with open(file_, 'rb') as f:
            self.assertEqual(f.read(), b"\x00\x01")

    def test_unsuccessfull_write(self):
        al = ActivityLog()
        with self.assertRaises(OSError):
            al.add(write, self.path('missing', 'test.txt'), "Test")
        self.assertEqual(len(al), 0)

    def test_transaction_status(self):
        al = ActivityLog(autobegin=False)
        with self.assertRaises(TransactionError):
            al.commit()
        with self.assertRaises(TransactionError):
            al.rollback()

        al.begin()
        al.commit()

        with self.assertRaises(TransactionError):
            al.commit()

    def test_transaction(self):
        al = ActivityLog()
        first, second = self.path('first.txt'), self.path('second.txt')

        def dostuff():
            al.add(write, first, "1")
            al.add(write, second, "2")

        dostuff()
        self.assertEqual(len(al), 2)
        al.rollback()
        self.assertFalse(os.path.exists(first))
        self.assertFalse(os.path.exists(second))
        self.assertEqual(len(al), 0)

        dostuff()
        al.commit()
        self.assertTrue(os.path.exists(first))
        self.assertTrue(os.path.exists(second))

    @unittest.skipIf(os.geteuid() == 0, "permissions do not apply to root")
    def test_failed_rollback(self):
        al = ActivityLog()
        dir_ = self.path('test')
        os.mkdir(dir_)
        target = os.path.join(dir_, 'test.txt')
        al.add(write, target, "Test")

        os.chmod(dir_, stat.S_IRUSR | stat.S_IXUSR)
        try:
            with self.assertRaises(OSError):
                al.rollback()

        finally:
            os.chmod(dir_, stat.S_IRWXU | stat.S_IRWXG)

        self.assertFalse(os.path.exists(target))

    def test_delete(self):
        al = ActivityLog()
        testfile = self.path('test.txt')

        # nothing to remove
        self.assertIsNone(al.add(remove, testfile))
        al.commit()

        with open(testfile, "w") as f:
            f.write("###")

        al.add(remove, testfile)
        self.assertFalse(os.path.exists(testfile))

        al.rollback()
        self.assertTrue(os.path.exists(testfile))

        al.add(remove, testfile)
        self.assertFalse(os.path.exists(testfile))
        al.commit()
        self.assertFalse(os.path.exists(testfile))
        self.assertEqual(os.listdir(self.tempdir), [])

    def test_render(self):
        al = ActivityLog()
        target = self.path('plot.gnuplot')
        al.add(render, 'series.gnuplot', target, title='MYDUMMYTITLE',
               version='0.1', script_name='plot.gnuplot',
               png_name='plot.png', csv_name='plot.csv', x='epsilon',
               ys=['mass'], logscale=True)
        self.assertFalse(os.path.exists(target))
        al.rollback()
        self.assertFalse(os.path.exists(target))

        al.add(render, 'series.gnuplot', target, title='MYDUMMYTITLE',
               version='0.1', script_name='plot.gnuplot',
               png_name='plot.png', csv_name='plot.csv', x='epsilon',
               ys=['mass', 'relative_difference'], logscale=False)
        al.commit()
        with open(target) as f:
            content = f.read()
        self.assertIn('MYDUMMYTITLE', content)
        self.assertIn('"plot.csv" using "epsilon":"relative_difference"',
                      content)
        self.assertNotIn('logscale', content)

    def test_attach_to_session(self):
        engine = create_engine('sqlite:///{}'.format(self.path('db.sqlite')))
        Base.metadata.create_all(engine)
        session = sessionmaker(bind=engine)()
        ActivityLog.attach_to(session)
        target = self.path('artifact.json')

        session.activity_log.add(write, target, "{}")
        session.add(CacheEntry(key_hash=u'a' * 64, kind=u'estimate',
                               path=target))
        session.rollback()
        self.assertFalse(os.path.exists(target))
        self.assertEqual(session.query(CacheEntry).count(), 0)

        session.activity_log.add(write, target, "{}")
        session.add(CacheEntry(key_hash=u'a' * 64, kind=u'estimate',
                               path=target))
        session.commit()
        self.assertTrue(os.path.exists(target))
        self.assertEqual(session.query(CacheEntry).one().path, target)
        session.close()


if __name__ == '__main__':
    unittest.main()
